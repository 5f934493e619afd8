#include "schema.hpp"

#include <limits>
#include <set>

namespace reeb::schema {

namespace {

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

void expect_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (!keys.contains(key)) throw SchemaError(path + "." + key, "unknown field");
  }
}

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

int small_int(const Json& j, const std::string& path, int lo, int hi = std::numeric_limits<int>::max()) {
  const Integer v = integer_from_json(j, path);
  if (v < lo || v > hi) {
    throw SchemaError(path, "value " + v.get_str() + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return static_cast<int>(v.get_si());
}

std::string item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace

Json parse_document(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(source, std::string("malformed JSON: ") + e.what());
  }
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw SchemaError(path, "not a decimal integer");
    return v;
  }
  throw SchemaError(path, "expected an integer");
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, path));
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    Rational v;
    if (text.empty() || v.set_str(text, 10) != 0 || v.get_den() == 0) {
      throw SchemaError(path, "not an exact rational \"p/q\": \"" + text + "\"");
    }
    v.canonicalize();
    return v;
  }
  throw SchemaError(path, "expected an integer or a rational string");
}

AbelianGroup group_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"rank", "torsion"});
  const Integer rank = integer_from_json(field(j, "rank", path), path + ".rank");
  if (rank < 0) throw SchemaError(path + ".rank", "must be nonnegative");
  std::vector<Integer> torsion;
  if (j.contains("torsion")) {
    const Json& arr = expect_array(j["torsion"], path + ".torsion");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Integer t = integer_from_json(arr[i], item(path + ".torsion", i));
      if (t < 2) throw SchemaError(item(path + ".torsion", i), "torsion coefficient must be >= 2");
      torsion.push_back(std::move(t));
    }
  }
  return AbelianGroup(rank, std::move(torsion));
}

GradedGroup graded_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"n", "groups"});
  const int n = small_int(field(j, "n", path), path + ".n", 0);
  const Json& arr = expect_array(field(j, "groups", path), path + ".groups");
  if (arr.size() != static_cast<std::size_t>(n) + 1) {
    throw SchemaError(path + ".groups", "expected n+1 = " + std::to_string(n + 1) + " groups, got " +
                                            std::to_string(arr.size()));
  }
  std::vector<AbelianGroup> groups;
  for (std::size_t i = 0; i < arr.size(); ++i) groups.push_back(group_from_json(arr[i], item(path + ".groups", i)));
  return GradedGroup(std::move(groups));
}

TargetSequence target_from_json(const Json& j, const std::string& path) {
  GradedGroup g = graded_from_json(j, path);
  if (g.top_degree() < 1) throw SchemaError(path + ".n", "target needs n >= 1");
  return TargetSequence(std::move(g));
}

GeneratingManifold manifold_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"dim", "summands"});
  const int dim = small_int(field(j, "dim", path), path + ".dim", 0, 1 << 20);
  std::vector<SpherePair> summands;
  if (j.contains("summands")) {
    const Json& arr = expect_array(j["summands"], path + ".summands");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = item(path + ".summands", i);
      if (!arr[i].is_array() || arr[i].size() != 2) throw SchemaError(p, "expected a pair [a, b]");
      summands.push_back({small_int(arr[i][0], p + "[0]", 0, 1 << 20), small_int(arr[i][1], p + "[1]", 0, 1 << 20)});
    }
  }
  try {
    if (dim == 0) {
      GeneratingManifold m = GeneratingManifold::point();
      m.summands = std::move(summands);
      validate(m);
      return m;
    }
    if (summands.empty()) return GeneratingManifold::sphere(dim);
    return GeneratingManifold::connected_sum(dim, std::move(summands));
  } catch (const ValidationError& e) {
    throw SchemaError(path, e.what());
  }
}

Plan plan_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"n", "base", "operations"});
  Plan plan;
  plan.n = small_int(field(j, "n", path), path + ".n", 1);

  const std::string bp = path + ".base";
  if (j.contains("base")) {
    const Json& b = j["base"];
    if (!b.is_object()) throw SchemaError(bp, "expected an object");
    const Json& type = field(b, "type", bp);
    if (!type.is_string()) throw SchemaError(bp + ".type", "expected a string");
    const std::string kind = type.get<std::string>();
    if (kind == "ball") {
      expect_object(b, bp, {"type"});
      plan.base = BallBase{};
    } else if (kind == "bouquet") {
      expect_object(b, bp, {"type", "l"});
      Integer l = integer_from_json(field(b, "l", bp), bp + ".l");
      if (l < 0) throw SchemaError(bp + ".l", "must be nonnegative");
      plan.base = BouquetBase{std::move(l)};
    } else if (kind == "custom") {
      expect_object(b, bp, {"type", "homology"});
      GradedGroup h = graded_from_json(field(b, "homology", bp), bp + ".homology");
      if (h.top_degree() != plan.n) throw SchemaError(bp + ".homology.n", "does not match plan n");
      try {
        (void)custom_model(h);
      } catch (const InputError& e) {
        throw SchemaError(bp + ".homology", e.what());
      }
      plan.base = CustomBase{std::move(h)};
    } else {
      throw SchemaError(bp + ".type", "unknown base type \"" + kind + "\"");
    }
  }

  const Json& ops = expect_array(field(j, "operations", path), path + ".operations");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::string p = item(path + ".operations", i);
    GeneratingManifold m = manifold_from_json(ops[i], p);
    if (m.dim >= plan.n) {
      throw SchemaError(p + ".dim", "dimension " + std::to_string(m.dim) + " must be < n = " + std::to_string(plan.n));
    }
    plan.operations.push_back(std::move(m));
  }
  return plan;
}

FunctionSpec function_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  const Json& kind_json = field(j, "kind", path);
  if (!kind_json.is_string()) throw SchemaError(path + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();

  auto rationals = [&](const char* key) {
    const std::string p = path + "." + key;
    const Json& arr = expect_array(field(j, key, path), p);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_from_json(arr[i], item(p, i)));
    return out;
  };

  FunctionSpec spec;
  if (kind == "polynomial") {
    expect_object(j, path, {"kind", "coeffs"});
    spec = Polynomial{rationals("coeffs")};
  } else if (kind == "exponential") {
    expect_object(j, path, {"kind", "base"});
    spec = Exponential{rational_from_json(field(j, "base", path), path + ".base")};
  } else if (kind == "logarithm") {
    expect_object(j, path, {"kind", "base"});
    spec = Logarithm{rational_from_json(field(j, "base", path), path + ".base")};
  } else if (kind == "samples") {
    expect_object(j, path, {"kind", "values"});
    spec = Samples{rationals("values")};
  } else {
    throw SchemaError(path + ".kind", "unknown function kind \"" + kind + "\"");
  }
  try {
    validate(spec);
  } catch (const InputError& e) {
    throw SchemaError(path, e.what());
  }
  return spec;
}

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json to_json(const Rational& v) { return Json(v.get_str()); }

Json to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion()) torsion.push_back(to_json(t));
  return {{"rank", to_json(g.rank())}, {"torsion", std::move(torsion)}};
}

Json to_json(const GradedGroup& g) {
  Json groups = Json::array();
  for (const auto& x : g.groups()) groups.push_back(to_json(x));
  return {{"n", g.top_degree()}, {"groups", std::move(groups)}};
}

Json to_json(const TargetSequence& t) { return to_json(t.groups()); }

Json to_json(const GeneratingManifold& m) {
  Json summands = Json::array();
  for (const auto& p : m.summands) summands.push_back(Json::array({p.a, p.b}));
  return {{"dim", m.dim}, {"summands", std::move(summands)}};
}

Json to_json(const BaseSpec& base) {
  if (const auto* b = std::get_if<BouquetBase>(&base)) return {{"type", "bouquet"}, {"l", to_json(b->l)}};
  if (const auto* c = std::get_if<CustomBase>(&base)) return {{"type", "custom"}, {"homology", to_json(c->homology)}};
  return {{"type", "ball"}};
}

Json to_json(const Plan& plan) {
  Json ops = Json::array();
  for (const auto& m : plan.operations) ops.push_back(to_json(m));
  return {{"n", plan.n}, {"base", to_json(plan.base)}, {"operations", std::move(ops)}};
}

Json to_json(const ReebModel& w) {
  return {{"n", w.n}, {"label", w.label}, {"homology", to_json(w.homology)}};
}

Json to_json(const Certificate& c) {
  return {{"condition", c.condition},
          {"degrees", c.degrees},
          {"round", c.round ? Json(*c.round) : Json(nullptr)},
          {"note", c.note}};
}

Json to_json(const FeasibilityReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"certificate", to_json(r.certificate)},
          {"plan", r.plan ? to_json(*r.plan) : Json(nullptr)},
          {"checks",
           {{"thm1", r.checks.strict_increase},
            {"remark1", r.checks.mirrored_increase},
            {"prop3", r.checks.top_dominance},
            {"necessary", r.checks.necessary}}}};
}

Json to_json(const MinimalDimension& m) {
  Json table = Json::array();
  for (const auto& v : m.table) {
    Json ranks = Json::array();
    for (const auto& r : v.ranks) ranks.push_back(to_json(r));
    table.push_back({{"n", v.n},
                     {"ranks", std::move(ranks)},
                     {"thm1", v.strict_increase},
                     {"remark1", v.mirrored_increase},
                     {"peel", v.peeled}});
  }
  return {{"min_n", m.min_n ? Json(*m.min_n) : Json(nullptr)}, {"table", std::move(table)}};
}

Json to_json(const SearchBounds& b) {
  return {{"max_n", b.max_n}, {"max_copies", b.max_copies}, {"max_total_rank", b.max_total_rank}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace reeb::schema

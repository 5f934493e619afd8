#include "reeb/planner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "reeb/errors.hpp"

namespace reeb {

namespace {

// Plans are materialized one operation (and one summand) per unit of rank.
constexpr long kMaxPlanUnits = 10'000'000;

using Ranks = std::vector<Integer>;
using Counts = std::vector<long>;

Ranks free_ranks(const TargetSequence& t) {
  if (!t.groups().is_free()) {
    throw UnsupportedTorsion("target has torsion: " + t.groups().to_string());
  }
  return t.groups().ranks();
}

Counts plan_counts(const TargetSequence& t) {
  Counts out;
  Integer total = 0;
  for (const auto& r : free_ranks(t)) {
    total += r;
    if (total > kMaxPlanUnits) {
      throw InputError("total rank exceeds " + std::to_string(kMaxPlanUnits) + "; plan too large to materialize");
    }
    out.push_back(r.get_si());
  }
  return out;
}

template <class Seq>
std::optional<int> first_positive(const Seq& r) {
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] > 0) return static_cast<int>(j);
  }
  return std::nullopt;
}

bool strictly_increasing(const Ranks& r, int from, int to) {
  for (int j = from; j < to; ++j) {
    if (!(r[j] < r[j + 1])) return false;
  }
  return true;
}

}  // namespace

TargetSequence::TargetSequence(GradedGroup groups) : groups_(std::move(groups)) {
  if (groups_.top_degree() < 1) {
    throw InputError("target needs n >= 1, got " + std::to_string(groups_.top_degree()));
  }
}

std::optional<int> effective_minimum(const GradedGroup& g) {
  for (int j = 0; j <= g.top_degree(); ++j) {
    if (!g[j].is_trivial()) return j;
  }
  return std::nullopt;
}

NecessaryCheck check_necessary(const TargetSequence& t) {
  const int n = t.n();
  auto fail = [](std::string condition, std::vector<int> degrees, std::string detail) {
    return NecessaryCheck{false, std::move(condition), std::move(degrees), std::move(detail)};
  };
  if (!t[0].is_trivial()) {
    return fail("trivial_degree_zero", {0}, "G_0 = " + t[0].to_string() + " is nontrivial");
  }
  std::vector<int> torsion_top;
  for (int j : {n - 1, n}) {
    if (!t[j].is_free()) torsion_top.push_back(j);
  }
  if (!torsion_top.empty()) {
    return fail("free_top_degrees", torsion_top, "G_{n-1} and G_n must be free");
  }
  const auto j0 = effective_minimum(t);
  if (!j0) return {};
  if (t[n].is_trivial()) {
    return fail("top_dominates_minimum", {*j0, n}, "G_" + std::to_string(*j0) + " is nontrivial but G_n = 0");
  }
  if (t[*j0].rank() > t[n].rank()) {
    return fail("top_dominates_minimum", {*j0, n},
                "rank G_" + std::to_string(*j0) + " = " + t[*j0].rank().get_str() + " > rank G_n = " +
                    t[n].rank().get_str());
  }
  if (!t[*j0].is_free()) {
    return fail("free_effective_minimum", {*j0}, "G_" + std::to_string(*j0) + " = " + t[*j0].to_string());
  }
  return {};
}

bool check_strict_increase(const TargetSequence& t) {
  const Ranks r = free_ranks(t);
  if (r[0] != 0) return false;
  const auto j0 = first_positive(r);
  return !j0 || strictly_increasing(r, *j0, t.n());
}

bool check_mirrored_increase(const TargetSequence& t) {
  const Ranks r = free_ranks(t);
  if (r[0] != 0) return false;
  const auto j0 = first_positive(r);
  if (!j0) return true;
  const int n = t.n();
  const int span = n - *j0;
  if (span == 0) return true;
  const int upper = (span % 2 != 0) ? *j0 + (span - 1) / 2 : *j0 + span / 2 - 1;
  if (!strictly_increasing(r, upper, n)) return false;
  for (int j = *j0; j < upper; ++j) {
    if (r[j + 1] - r[j] >= 0) continue;
    const int mirror = n - (j - *j0);
    if (!(r[j] - r[j + 1] < r[mirror] - r[mirror - 1])) return false;
  }
  return true;
}

bool check_top_dominance(const TargetSequence& t) {
  const Ranks r = free_ranks(t);
  if (r[0] != 0) return false;
  const Integer middle = std::accumulate(r.begin() + 1, r.end() - 1, Integer(0));
  return middle <= r.back();
}

Plan plan_spheres_and_points(const TargetSequence& t) {
  if (!check_top_dominance(t)) {
    throw StrategyInfeasible("sum of ranks in degrees 1..n-1 exceeds rank G_n (or G_0 != 0)");
  }
  const Counts r = plan_counts(t);
  const int n = t.n();
  Plan plan{n, BallBase{}, {}};
  plan.operations.reserve(static_cast<std::size_t>(r.back()));
  long spheres = 0;
  for (int j = 1; j < n; ++j) {
    for (long c = 0; c < r[j]; ++c) plan.operations.push_back(GeneratingManifold::sphere(n - j));
    spheres += r[j];
  }
  for (long c = spheres; c < r.back(); ++c) plan.operations.push_back(GeneratingManifold::point());
  return plan;
}

PeelResult plan_peel(const TargetSequence& t) {
  Counts residual = plan_counts(t);
  const int n = t.n();
  if (residual[0] != 0) {
    return {std::nullopt, PeelFailure{0, 0, "G_0 must be trivial"}};
  }
  Plan plan{n, BallBase{}, {}};
  for (int round = 0;; ++round) {
    const auto j0 = first_positive(residual);
    if (!j0) break;
    if (*j0 == n) {
      plan.operations.insert(plan.operations.end(), static_cast<std::size_t>(residual[n]),
                             GeneratingManifold::point());
      break;
    }
    const int d = n - *j0;
    const long m = residual[*j0];
    // Twice the midpoint; every copy S^{j-j0} x S^{n-j} raises degrees j
    // and n + j0 - j.
    const int twice_mid = n + *j0;
    std::vector<SpherePair> copies;
    for (int j = *j0 + 1; 2 * j < twice_mid; ++j) {
      copies.insert(copies.end(), static_cast<std::size_t>(residual[j]), SpherePair{j - *j0, n - j});
      residual[twice_mid - j] -= residual[j];
      residual[j] = 0;
    }
    if (twice_mid % 2 == 0) {
      const int mid = twice_mid / 2;
      const long pairs = residual[mid] / 2;
      copies.insert(copies.end(), static_cast<std::size_t>(pairs), SpherePair{mid - *j0, n - mid});
      residual[mid] -= 2 * pairs;
    }
    plan.operations.push_back(copies.empty() ? GeneratingManifold::sphere(d)
                                             : GeneratingManifold::connected_sum(d, std::move(copies)));
    plan.operations.insert(plan.operations.end(), static_cast<std::size_t>(m - 1), GeneratingManifold::sphere(d));
    residual[*j0] -= m;
    residual[n] -= m;

    for (int j = 0; j <= n; ++j) {
      if (residual[j] < 0) {
        return {std::nullopt, PeelFailure{j, round,
                                          "residual rank at degree " + std::to_string(j) + " became " +
                                              std::to_string(residual[j]) + " after peeling at j0 = " +
                                              std::to_string(*j0)}};
      }
    }
  }
  return {std::move(plan), std::nullopt};
}

bool verify_plan(const Plan& plan, const TargetSequence& t) {
  if (plan.n != t.n()) {
    throw InputError("plan has n = " + std::to_string(plan.n) + " but target has n = " + std::to_string(t.n()));
  }
  return delta_of_plan(plan) == t.groups();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Realized:
      return "REALIZED";
    case Verdict::PeelFailed:
      return "PEEL_FAILED";
    case Verdict::NecessaryViolated:
      return "NECESSARY_VIOLATED";
    case Verdict::UnsupportedTorsion:
      return "UNSUPPORTED_TORSION";
  }
  return "UNKNOWN";
}

FeasibilityReport assess(const TargetSequence& t) {
  FeasibilityReport report;
  const NecessaryCheck necessary = check_necessary(t);
  report.checks.necessary = necessary.pass;
  const bool free = t.groups().is_free();
  if (free) {
    report.checks.strict_increase = check_strict_increase(t);
    report.checks.mirrored_increase = check_mirrored_increase(t);
    report.checks.top_dominance = check_top_dominance(t);
  }

  if (!necessary.pass) {
    report.verdict = Verdict::NecessaryViolated;
    report.certificate = {necessary.condition, necessary.degrees, std::nullopt, necessary.detail};
    return report;
  }
  if (!free) {
    std::vector<int> degrees;
    for (int j = 0; j <= t.n(); ++j) {
      if (!t[j].is_free()) degrees.push_back(j);
    }
    report.verdict = Verdict::UnsupportedTorsion;
    report.certificate = {"torsion", std::move(degrees), std::nullopt,
                          "generating manifolds in the catalog have torsion-free homology"};
    return report;
  }

  Plan plan;
  if (t.groups().is_zero()) {
    plan = Plan{t.n(), BallBase{}, {}};
    report.certificate = {"empty", {}, std::nullopt, "all-zero target; realized by the empty iteration"};
  } else if (report.checks.top_dominance) {
    plan = plan_spheres_and_points(t);
    report.certificate = {"prop3", {}, std::nullopt, "spheres and points"};
  } else {
    PeelResult peeled = plan_peel(t);
    if (!peeled.ok()) {
      report.verdict = Verdict::PeelFailed;
      report.certificate = {"peel", {peeled.failure->degree}, peeled.failure->round,
                            peeled.failure->detail + "; this strategy failed, realizability is undecided"};
      return report;
    }
    plan = std::move(*peeled.plan);
    report.certificate = {"peel", {}, std::nullopt, "peeling rounds"};
  }
  if (!verify_plan(plan, t)) {
    throw std::logic_error("planner produced a plan whose replay does not match " + t.groups().to_string());
  }
  report.verdict = Verdict::Realized;
  report.plan = std::move(plan);
  return report;
}

TargetSequence sequence_from_function(const FunctionSpec& spec, int n) {
  std::vector<AbelianGroup> groups;
  for (auto& r : ranks_from_function(spec, n)) groups.push_back(AbelianGroup::free(std::move(r)));
  return TargetSequence(GradedGroup(std::move(groups)));
}

MinimalDimension find_min_n(const FunctionSpec& spec, int n_max) {
  if (n_max < 1) throw InputError("n_max must be >= 1, got " + std::to_string(n_max));
  MinimalDimension out;
  for (int n = 1; n <= n_max; ++n) {
    const TargetSequence t = sequence_from_function(spec, n);
    FunctionVerdict v;
    v.n = n;
    v.ranks = t.groups().ranks();
    v.strict_increase = check_strict_increase(t);
    v.mirrored_increase = check_mirrored_increase(t);
    const PeelResult peeled = plan_peel(t);
    v.peeled = peeled.ok() && verify_plan(*peeled.plan, t);
    // An all-zero sequence is realized vacuously and does not count.
    if (v.peeled && !t.groups().is_zero() && !out.min_n) out.min_n = n;
    out.table.push_back(std::move(v));
  }
  return out;
}

}  // namespace reeb

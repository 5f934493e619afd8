#include "reeb/bubbling.hpp"

#include "reeb/errors.hpp"

namespace reeb {

namespace {

void require_target_dim(int n) {
  if (n < 1) throw InputError("target dimension n must be >= 1, got " + std::to_string(n));
}

}  // namespace

ReebModel special_generic_ball(int n) {
  require_target_dim(n);
  return {n, GradedGroup(n).with(0, AbelianGroup::free(1)), "ball D^" + std::to_string(n)};
}

ReebModel bouquet(int n, const Integer& l) {
  require_target_dim(n);
  if (l < 0) throw InputError("bouquet size " + l.get_str() + " is negative");
  ReebModel w = special_generic_ball(n);
  w.homology = w.homology.with(n, AbelianGroup::free(l));
  w.label = "bouquet of " + l.get_str() + " copies of S^" + std::to_string(n);
  return w;
}

ReebModel custom_model(GradedGroup homology, std::string label) {
  const int n = homology.top_degree();
  require_target_dim(n);
  const AbelianGroup& h0 = homology[0];
  if (h0.rank() < 1 || !h0.is_free()) {
    throw InputError("H_0 must be free of rank >= 1, got " + h0.to_string());
  }
  return {n, std::move(homology), std::move(label)};
}

ReebModel make_base(int n, const BaseSpec& base) {
  if (const auto* b = std::get_if<BouquetBase>(&base)) return bouquet(n, b->l);
  if (const auto* c = std::get_if<CustomBase>(&base)) {
    if (c->homology.top_degree() != n) {
      throw InputError("custom base has top degree " + std::to_string(c->homology.top_degree()) +
                       " but plan has n = " + std::to_string(n));
    }
    return custom_model(c->homology);
  }
  return special_generic_ball(n);
}

GradedGroup contribution(const GeneratingManifold& s, int n) {
  require_target_dim(n);
  validate(s);
  if (s.dim >= n) {
    throw DimensionError("generating manifold " + s.to_string() + " has dimension " + std::to_string(s.dim) +
                         " >= n = " + std::to_string(n));
  }
  return graded_sum_shift(GradedGroup(n), GradedGroup(homology(s)), n - s.dim);
}

ReebModel apply_operation(const ReebModel& w, const GeneratingManifold& s) {
  return {w.n, direct_sum(w.homology, contribution(s, w.n)), w.label};
}

void validate(const Plan& plan) {
  require_target_dim(plan.n);
  for (std::size_t i = 0; i < plan.operations.size(); ++i) {
    const auto& s = plan.operations[i];
    try {
      validate(s);
    } catch (const ValidationError& e) {
      throw PlanError(i, e.what());
    }
    if (s.dim >= plan.n) {
      throw PlanError(i, "dimension " + std::to_string(s.dim) + " >= n = " + std::to_string(plan.n));
    }
  }
}

ReebModel apply_plan(const Plan& plan) {
  validate(plan);
  ReebModel w = make_base(plan.n, plan.base);
  for (const auto& s : plan.operations) w = apply_operation(w, s);
  return w;
}

GradedGroup delta_of_plan(const Plan& plan) {
  validate(plan);
  GradedGroup delta(plan.n);
  for (const auto& s : plan.operations) delta = direct_sum(delta, contribution(s, plan.n));
  return delta;
}

}  // namespace reeb

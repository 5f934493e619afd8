#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reeb/abelian.hpp"
#include "reeb/bubbling.hpp"
#include "reeb/functions.hpp"

namespace reeb {

// Desired increments {G_j} for j = 0..n, n >= 1.
class TargetSequence {
 public:
  explicit TargetSequence(GradedGroup groups);
  static TargetSequence from_ranks(std::initializer_list<long> ranks) {
    return TargetSequence(GradedGroup::from_ranks(ranks));
  }

  int n() const noexcept { return groups_.top_degree(); }
  const GradedGroup& groups() const noexcept { return groups_; }
  const AbelianGroup& operator[](int j) const { return groups_[j]; }

 private:
  GradedGroup groups_;
};

// Smallest degree with a nontrivial group.
std::optional<int> effective_minimum(const GradedGroup& g);
inline std::optional<int> effective_minimum(const TargetSequence& t) { return effective_minimum(t.groups()); }

struct NecessaryCheck {
  bool pass = true;
  std::string condition;     // empty on pass
  std::vector<int> degrees;  // offending degrees
  std::string detail;
};

// Conditions every realizable sequence satisfies, in order:
//   trivial_degree_zero      G_0 = 0
//   free_top_degrees         G_{n-1} and G_n free
//   top_dominates_minimum    some G_j != 0  =>  G_n != 0 and rank G_{j0} <= rank G_n
//   free_effective_minimum   G_{j0} free
// The first violation is reported.
NecessaryCheck check_necessary(const TargetSequence& t);

// The three sufficient conditions below throw UnsupportedTorsion on a
// sequence with torsion, and all require G_0 = 0.

// Ranks strictly increase from the effective minimum through n.
bool check_strict_increase(const TargetSequence& t);

// Relaxation of check_strict_increase: only the upper half (from
// j0 + (n-j0-1)/2 when n - j0 is odd, from j0 + (n-j0)/2 - 1 when even)
// must strictly increase. Each lower-half step j -> j+1 must either not
// decrease, or its drop r_j - r_{j+1} must be strictly smaller than the
// mirrored rise r_{n-(j-j0)} - r_{n-(j-j0+1)}.
bool check_mirrored_increase(const TargetSequence& t);

// sum_{k=1}^{n-1} rank G_k <= rank G_n.
bool check_top_dominance(const TargetSequence& t);

// rank G_j spheres S^{n-j} for 1 <= j <= n-1, then the remaining
// rank G_n - sum rank G_k points. Throws StrategyInfeasible when
// check_top_dominance fails.
Plan plan_spheres_and_points(const TargetSequence& t);

struct PeelFailure {
  int degree = 0;  // first degree whose residual went negative
  int round = 0;   // zero-based peeling round
  std::string detail;
};

struct PeelResult {
  std::optional<Plan> plan;
  std::optional<PeelFailure> failure;
  bool ok() const noexcept { return plan.has_value(); }
};

// Peeling planner. Each round takes the effective minimum j0 of the
// residual, emits rank G_{j0} operations of dimension d = n - j0 (the
// first a connected sum absorbing every degree strictly between j0 and the
// midpoint (n + j0)/2, plus floor(r_mid / 2) copies of S^{d/2} x S^{d/2}
// when d is even; the rest plain spheres S^d), subtracts their
// contributions and recurses. Once j0 = n the remainder is points.
// Succeeds on every sequence passing check_mirrored_increase.
PeelResult plan_peel(const TargetSequence& t);

// Exact equality of delta_of_plan(plan) with the target. Throws InputError
// on an n mismatch.
bool verify_plan(const Plan& plan, const TargetSequence& t);

enum class Verdict { Realized, PeelFailed, NecessaryViolated, UnsupportedTorsion };

std::string to_string(Verdict v);

struct Certificate {
  std::string condition;
  std::vector<int> degrees;
  std::optional<int> round;
  std::string note;
};

struct CheckTrace {
  bool strict_increase = false;    // "thm1"
  bool mirrored_increase = false;  // "remark1"
  bool top_dominance = false;      // "prop3"
  bool necessary = false;
};

struct FeasibilityReport {
  Verdict verdict = Verdict::PeelFailed;
  Certificate certificate;
  std::optional<Plan> plan;  // set exactly when verdict == Realized
  CheckTrace checks;
};

// Runs every checker, then plans with spheres and points when
// check_top_dominance holds and by peeling otherwise. Necessary-condition
// violations take precedence over torsion. A realized plan has always been
// replayed through verify_plan.
FeasibilityReport assess(const TargetSequence& t);

TargetSequence sequence_from_function(const FunctionSpec& spec, int n);

struct FunctionVerdict {
  int n = 0;
  std::vector<Integer> ranks;
  bool strict_increase = false;
  bool mirrored_increase = false;
  bool peeled = false;  // plan_peel succeeded and the plan verified
};

struct MinimalDimension {
  std::optional<int> min_n;
  std::vector<FunctionVerdict> table;  // n = 1..n_max
};

// Smallest n <= n_max at which the sequence induced by `spec` is nonzero
// and realized by the peeling planner, with the verdict for every n.
MinimalDimension find_min_n(const FunctionSpec& spec, int n_max);

}  // namespace reeb

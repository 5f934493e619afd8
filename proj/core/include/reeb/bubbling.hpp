#pragma once

#include <string>
#include <variant>
#include <vector>

#include "reeb/abelian.hpp"
#include "reeb/manifolds.hpp"

namespace reeb {

// A Reeb space W_f known only through its integral homology in degrees
// 0..n, where n is the dimension of the target.
struct ReebModel {
  int n = 1;
  GradedGroup homology{1};
  std::string label;

  friend bool operator==(const ReebModel& a, const ReebModel& b) {
    return a.n == b.n && a.homology == b.homology;
  }
};

// Contractible Reeb space of a special generic map with a sphere as its
// singular value set (D^n).
ReebModel special_generic_ball(int n);
// Bouquet of l copies of S^n.
ReebModel bouquet(int n, const Integer& l);
// Arbitrary homology. Throws InputError unless H_0 is free of rank >= 1.
ReebModel custom_model(GradedGroup homology, std::string label = "custom");

struct BallBase {
  friend bool operator==(const BallBase&, const BallBase&) = default;
};
struct BouquetBase {
  Integer l{0};
  friend bool operator==(const BouquetBase& a, const BouquetBase& b) { return a.l == b.l; }
};
struct CustomBase {
  GradedGroup homology{1};
  friend bool operator==(const CustomBase&, const CustomBase&) = default;
};
using BaseSpec = std::variant<BallBase, BouquetBase, CustomBase>;

ReebModel make_base(int n, const BaseSpec& base);

// A base model followed by bubbling operations, each named by its
// generating manifold.
struct Plan {
  int n = 1;
  BaseSpec base = BallBase{};
  std::vector<GeneratingManifold> operations;

  friend bool operator==(const Plan&, const Plan&) = default;
};

// Homology added by one operation along S in an n-dimensional target:
// H_{i-(n-dim S)}(S) in degree i, so the top class of S lands in degree n.
// Throws DimensionError when dim S >= n.
GradedGroup contribution(const GeneratingManifold& s, int n);

ReebModel apply_operation(const ReebModel& w, const GeneratingManifold& s);

// Throws PlanError carrying the index of the first bad operation.
void validate(const Plan& plan);

ReebModel apply_plan(const Plan& plan);

// The increments {G_j}: degreewise sum of every operation's contribution.
GradedGroup delta_of_plan(const Plan& plan);

}  // namespace reeb

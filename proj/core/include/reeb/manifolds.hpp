#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "reeb/abelian.hpp"
#include "reeb/snf.hpp"

namespace reeb {

enum class ManifoldKind { Point, Sphere, ConnectedSum };

// S^a x S^b, stored with a <= b.
struct SpherePair {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const SpherePair&, const SpherePair&) = default;
};

// A closed, connected, orientable manifold from the catalog used to
// generate bubbling operations: a point, a sphere, or a connected sum of
// products of two spheres of common total dimension.
//
// The struct is an aggregate so that decoded input can be held before it
// is checked; the factories always return valid, canonically ordered
// values.
struct GeneratingManifold {
  ManifoldKind kind = ManifoldKind::Point;
  int dim = 0;
  std::vector<SpherePair> summands;

  static GeneratingManifold point() { return {}; }
  static GeneratingManifold sphere(int d);
  // Orders each pair as a <= b and sorts the summands, then validates.
  static GeneratingManifold connected_sum(int d, std::vector<SpherePair> summands);

  // "pt", "S^3", "S^1xS^2 # S^1xS^2".
  std::string to_string() const;

  friend bool operator==(const GeneratingManifold&, const GeneratingManifold&) = default;
};

// Throws ValidationError naming the violated invariant.
void validate(const GeneratingManifold& m);

// Integral homology in degrees 0..dim. Always free.
std::vector<AbelianGroup> homology(const GeneratingManifold& m);
std::vector<std::int64_t> betti_numbers(const GeneratingManifold& m);

// Cellular chain complex with one cell per homology generator. Products
// are built with tensor(); a connected sum glues the summands' lower cells
// on a shared 0-cell and caps them with a single top cell.
ChainComplex cellular_model(const GeneratingManifold& m);

}  // namespace reeb

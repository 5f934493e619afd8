#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reeb/bubbling.hpp"
#include "reeb/manifolds.hpp"
#include "reeb/planner.hpp"

namespace reeb {

// Limits for the exhaustive search. Desk-scale by default.
struct SearchBounds {
  int max_n = 4;
  int max_copies = 4;       // multiplicity cap per summand type in one manifold
  int max_total_rank = 8;   // cap on the sum of target ranks and on any vector entry
};

// Throws InputError unless every bound is positive.
void validate(const SearchBounds& bounds);

// Rank vector over degrees 0..n added by one operation, and one manifold
// that produces it.
struct ContributionCandidate {
  std::vector<int> ranks;
  GeneratingManifold witness;
};

// Every distinct contribution vector of a catalog manifold of dimension d
// in an n-dimensional target, ordered by summand multiplicities
// lexicographically (pairs (1, d-1), (2, d-2), ... in turn). Throws
// InputError unless 0 <= d < n.
std::vector<ContributionCandidate> enumerate_contributions(int n, int d, const SearchBounds& bounds);

struct SearchOutcome {
  std::optional<Plan> plan;  // empty: no plan exists within bounds
  std::uint64_t nodes = 0;   // search tree nodes visited
};

// Exhaustive search over multisets of exactly rank G_n contribution vectors
// (one per operation) summing to the target. Throws UnsupportedTorsion on
// torsion and InputError when the target exceeds the bounds.
SearchOutcome search_realization(const TargetSequence& t, const SearchBounds& bounds = {});

}  // namespace reeb

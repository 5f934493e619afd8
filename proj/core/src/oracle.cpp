#include "reeb/oracle.hpp"

#include <functional>

#include "reeb/errors.hpp"

namespace reeb {

void validate(const SearchBounds& bounds) {
  if (bounds.max_n < 1 || bounds.max_copies < 1 || bounds.max_total_rank < 1) {
    throw InputError("search bounds must be positive");
  }
}

std::vector<ContributionCandidate> enumerate_contributions(int n, int d, const SearchBounds& bounds) {
  validate(bounds);
  if (d < 0 || d >= n) {
    throw InputError("manifold dimension " + std::to_string(d) + " outside 0.." + std::to_string(n - 1));
  }
  const int shift = n - d;
  std::vector<int> base(static_cast<std::size_t>(n) + 1, 0);
  base[static_cast<std::size_t>(shift)] = 1;
  base[static_cast<std::size_t>(n)] = 1;

  if (d == 0) return {{base, GeneratingManifold::point()}};
  if (d == 1) return {{base, GeneratingManifold::sphere(1)}};

  std::vector<SpherePair> kinds;
  for (int a = 1; 2 * a <= d; ++a) kinds.push_back({a, d - a});

  std::vector<ContributionCandidate> out;
  std::vector<int> multiplicity(kinds.size(), 0);
  // Odometer over multiplicities, last kind fastest.
  for (;;) {
    std::vector<int> ranks = base;
    std::vector<SpherePair> summands;
    bool within = true;
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      const int c = multiplicity[k];
      ranks[static_cast<std::size_t>(shift + kinds[k].a)] += c;
      ranks[static_cast<std::size_t>(shift + kinds[k].b)] += c;
      summands.insert(summands.end(), static_cast<std::size_t>(c), kinds[k]);
    }
    for (int r : ranks) within = within && r <= bounds.max_total_rank;
    if (within) {
      out.push_back({std::move(ranks), summands.empty() ? GeneratingManifold::sphere(d)
                                                        : GeneratingManifold::connected_sum(d, std::move(summands))});
    }
    std::size_t k = kinds.size();
    while (k > 0 && multiplicity[k - 1] == bounds.max_copies) multiplicity[--k] = 0;
    if (k == 0) break;
    ++multiplicity[k - 1];
  }
  return out;
}

SearchOutcome search_realization(const TargetSequence& t, const SearchBounds& bounds) {
  validate(bounds);
  if (!t.groups().is_free()) throw UnsupportedTorsion("search handles free targets only");
  const int n = t.n();
  if (n > bounds.max_n) {
    throw InputError("n = " + std::to_string(n) + " exceeds max_n = " + std::to_string(bounds.max_n));
  }
  std::vector<int> target;
  Integer total = 0;
  for (const auto& r : t.groups().ranks()) {
    total += r;
    if (total > bounds.max_total_rank) {
      throw InputError("total rank exceeds max_total_rank = " + std::to_string(bounds.max_total_rank));
    }
    target.push_back(static_cast<int>(r.get_si()));
  }

  std::vector<ContributionCandidate> candidates;
  for (int d = 0; d < n; ++d) {
    auto batch = enumerate_contributions(n, d, bounds);
    candidates.insert(candidates.end(), std::make_move_iterator(batch.begin()),
                      std::make_move_iterator(batch.end()));
  }

  SearchOutcome outcome;
  std::vector<int> residual = target;
  std::vector<std::size_t> chosen;
  const int operations = target[static_cast<std::size_t>(n)];

  // Multisets are enumerated as nondecreasing candidate index sequences.
  std::function<bool(std::size_t, int)> descend = [&](std::size_t first, int remaining) -> bool {
    ++outcome.nodes;
    if (remaining == 0) {
      for (int r : residual) {
        if (r != 0) return false;
      }
      return true;
    }
    for (std::size_t c = first; c < candidates.size(); ++c) {
      const auto& v = candidates[c].ranks;
      bool fits = true;
      for (std::size_t j = 0; j < v.size() && fits; ++j) fits = v[j] <= residual[j];
      if (!fits) continue;
      for (std::size_t j = 0; j < v.size(); ++j) residual[j] -= v[j];
      chosen.push_back(c);
      if (descend(c, remaining - 1)) return true;
      chosen.pop_back();
      for (std::size_t j = 0; j < v.size(); ++j) residual[j] += v[j];
    }
    return false;
  };

  if (descend(0, operations)) {
    Plan plan{n, BallBase{}, {}};
    for (std::size_t c : chosen) plan.operations.push_back(candidates[c].witness);
    outcome.plan = std::move(plan);
  }
  return outcome;
}

}  // namespace reeb

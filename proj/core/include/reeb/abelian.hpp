#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace reeb {

using Integer = mpz_class;
using Rational = mpq_class;

// Invariant-factor chain d_1 | d_2 | ... | d_k (every d_i >= 2) of the
// direct sum of cyclic groups Z/c for c in `coefficients`. Throws
// InputError when some coefficient is < 2.
std::vector<Integer> canonicalize_torsion(std::vector<Integer> coefficients);

// A finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k held in
// invariant-factor form, so that == is group isomorphism.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(Integer rank, std::vector<Integer> torsion = {});

  static AbelianGroup free(Integer rank) { return AbelianGroup(std::move(rank)); }

  const Integer& rank() const noexcept { return rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return rank_ == 0 && torsion_.empty(); }
  bool is_free() const noexcept { return torsion_.empty(); }

  // "0", "Z", "Z^2 + Z/2 + Z/12".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
  }

 private:
  Integer rank_{0};
  std::vector<Integer> torsion_;
};

AbelianGroup direct_sum(const AbelianGroup& g, const AbelianGroup& h);

// Groups in degrees 0..n. The top degree n is fixed at construction.
class GradedGroup {
 public:
  // All-zero groups in degrees 0..n.
  explicit GradedGroup(int n);
  // Throws InputError on an empty list.
  explicit GradedGroup(std::vector<AbelianGroup> groups);

  static GradedGroup from_ranks(std::span<const long> ranks);
  static GradedGroup from_ranks(std::initializer_list<long> ranks) {
    return from_ranks(std::span<const long>(ranks.begin(), ranks.size()));
  }

  int top_degree() const noexcept { return static_cast<int>(groups_.size()) - 1; }
  // Throws InputError for a degree outside 0..n.
  const AbelianGroup& operator[](int degree) const;
  std::span<const AbelianGroup> groups() const noexcept { return groups_; }

  // Copy with `degree` replaced.
  GradedGroup with(int degree, AbelianGroup g) const;

  std::vector<Integer> ranks() const;
  bool is_free() const noexcept;
  bool is_zero() const noexcept;
  std::string to_string() const;

  friend bool operator==(const GradedGroup& a, const GradedGroup& b) { return a.groups_ == b.groups_; }

 private:
  std::vector<AbelianGroup> groups_;
};

// Degree i of the result is a_i + b_{i - shift}; b is zero outside its own
// range. Throws InputError when shift + top(b) exceeds top(a).
GradedGroup graded_sum_shift(const GradedGroup& a, const GradedGroup& b, int shift);

// Degreewise sum of two graded groups with the same top degree.
GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b);

}  // namespace reeb

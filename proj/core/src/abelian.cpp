#include "reeb/abelian.hpp"

#include <algorithm>

#include "reeb/errors.hpp"

namespace reeb {

std::vector<Integer> canonicalize_torsion(std::vector<Integer> coefficients) {
  for (const auto& c : coefficients) {
    if (c < 2) {
      throw InputError("torsion coefficient " + c.get_str() + " is < 2");
    }
  }
  // Pairwise (gcd, lcm) exchange. After pass i, entry i divides every later
  // entry, and exchanges in later passes keep both slots multiples of it.
  const std::size_t k = coefficients.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Integer& a = coefficients[i];
      Integer& b = coefficients[j];
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) continue;
      Integer g = gcd(a, b);
      Integer l = (a / g) * b;
      a = std::move(g);
      b = std::move(l);
    }
  }
  std::erase_if(coefficients, [](const Integer& c) { return c == 1; });
  return coefficients;
}

AbelianGroup::AbelianGroup(Integer rank, std::vector<Integer> torsion)
    : rank_(std::move(rank)), torsion_(canonicalize_torsion(std::move(torsion))) {
  if (rank_ < 0) throw InputError("rank " + rank_.get_str() + " is negative");
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (rank_ == 1) {
    append("Z");
  } else if (rank_ > 1) {
    append("Z^" + rank_.get_str());
  }
  for (const auto& d : torsion_) append("Z/" + d.get_str());
  return out;
}

AbelianGroup direct_sum(const AbelianGroup& g, const AbelianGroup& h) {
  if (h.is_trivial()) return g;
  if (g.is_trivial()) return h;
  std::vector<Integer> torsion = g.torsion();
  torsion.insert(torsion.end(), h.torsion().begin(), h.torsion().end());
  return AbelianGroup(g.rank() + h.rank(), std::move(torsion));
}

GradedGroup::GradedGroup(int n) {
  if (n < 0) throw InputError("top degree " + std::to_string(n) + " is negative");
  groups_.resize(static_cast<std::size_t>(n) + 1);
}

GradedGroup::GradedGroup(std::vector<AbelianGroup> groups) : groups_(std::move(groups)) {
  if (groups_.empty()) throw InputError("graded group needs at least degree 0");
}

GradedGroup GradedGroup::from_ranks(std::span<const long> ranks) {
  std::vector<AbelianGroup> groups;
  groups.reserve(ranks.size());
  for (long r : ranks) groups.push_back(AbelianGroup::free(Integer(r)));
  return GradedGroup(std::move(groups));
}

const AbelianGroup& GradedGroup::operator[](int degree) const {
  if (degree < 0 || degree > top_degree()) {
    throw InputError("degree " + std::to_string(degree) + " outside 0.." + std::to_string(top_degree()));
  }
  return groups_[static_cast<std::size_t>(degree)];
}

GradedGroup GradedGroup::with(int degree, AbelianGroup g) const {
  (void)(*this)[degree];
  GradedGroup out = *this;
  out.groups_[static_cast<std::size_t>(degree)] = std::move(g);
  return out;
}

std::vector<Integer> GradedGroup::ranks() const {
  std::vector<Integer> out;
  out.reserve(groups_.size());
  for (const auto& g : groups_) out.push_back(g.rank());
  return out;
}

bool GradedGroup::is_free() const noexcept {
  return std::all_of(groups_.begin(), groups_.end(), [](const AbelianGroup& g) { return g.is_free(); });
}

bool GradedGroup::is_zero() const noexcept {
  return std::all_of(groups_.begin(), groups_.end(), [](const AbelianGroup& g) { return g.is_trivial(); });
}

std::string GradedGroup::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (i) out += ", ";
    out += groups_[i].to_string();
  }
  return out + ")";
}

GradedGroup graded_sum_shift(const GradedGroup& a, const GradedGroup& b, int shift) {
  if (shift < 0) throw InputError("negative shift " + std::to_string(shift));
  if (shift + b.top_degree() > a.top_degree()) {
    throw InputError("shift " + std::to_string(shift) + " places degree " + std::to_string(b.top_degree()) +
                     " beyond top degree " + std::to_string(a.top_degree()));
  }
  std::vector<AbelianGroup> groups(a.groups().begin(), a.groups().end());
  for (int i = 0; i <= b.top_degree(); ++i) {
    auto& slot = groups[static_cast<std::size_t>(i + shift)];
    slot = direct_sum(slot, b[i]);
  }
  return GradedGroup(std::move(groups));
}

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b) {
  if (a.top_degree() != b.top_degree()) {
    throw InputError("top degrees differ: " + std::to_string(a.top_degree()) + " vs " +
                     std::to_string(b.top_degree()));
  }
  return graded_sum_shift(a, b, 0);
}

}  // namespace reeb

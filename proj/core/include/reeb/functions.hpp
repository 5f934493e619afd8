#pragma once

#include <variant>
#include <vector>

#include "reeb/abelian.hpp"

namespace reeb {

// Real functions c on (0, +inf) described exactly, so that floor(c(j)) at
// integer points is computed without rounding.

// c(x) = sum coefficients[k] x^k. Must be nonconstant.
struct Polynomial {
  std::vector<Rational> coefficients;
};

// c(x) = base^x, base > 1.
struct Exponential {
  Rational base;
};

// c(x) = log_base(x), base > 1.
struct Logarithm {
  Rational base;
};

// c(j) = values[j] for j = 0..values.size()-1.
struct Samples {
  std::vector<Rational> values;
};

using FunctionSpec = std::variant<Polynomial, Exponential, Logarithm, Samples>;

// Throws InputError on a constant polynomial or a base <= 1.
void validate(const FunctionSpec& spec);

// floor(c(x)) for integer x >= 1 (x >= 0 for polynomials, exponentials and
// samples). Throws InputError outside the domain or past the sample list.
Integer floor_at(const FunctionSpec& spec, int x);

// Rank sequence r_0 = 0, r_j = max(0, floor(c(j))) for 1 <= j <= n.
std::vector<Integer> ranks_from_function(const FunctionSpec& spec, int n);

}  // namespace reeb

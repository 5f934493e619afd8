#include "reeb/functions.hpp"

#include <type_traits>

#include "reeb/errors.hpp"

namespace reeb {

namespace {

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational power(const Rational& base, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

void validate(const FunctionSpec& spec) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          bool nonconstant = false;
          for (std::size_t k = 1; k < f.coefficients.size(); ++k) nonconstant |= f.coefficients[k] != 0;
          if (!nonconstant) throw InputError("polynomial must be nonconstant");
        } else if constexpr (std::is_same_v<T, Exponential> || std::is_same_v<T, Logarithm>) {
          if (f.base <= 1) throw InputError("base " + f.base.get_str() + " must be > 1");
        } else {
          if (f.values.empty()) throw InputError("sample list is empty");
        }
      },
      spec);
}

Integer floor_at(const FunctionSpec& spec, int x) {
  if (x < 0) throw InputError("evaluation point " + std::to_string(x) + " is negative");
  return std::visit(
      [x](const auto& f) -> Integer {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          Rational acc = 0;
          for (auto it = f.coefficients.rbegin(); it != f.coefficients.rend(); ++it) acc = acc * x + *it;
          return floor_of(acc);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return floor_of(power(f.base, static_cast<unsigned long>(x)));
        } else if constexpr (std::is_same_v<T, Logarithm>) {
          if (x == 0) throw InputError("logarithm undefined at 0");
          // Largest k with base^k <= x.
          Integer k = 0;
          Rational p = f.base;
          while (p <= x) {
            ++k;
            p *= f.base;
          }
          return k;
        } else {
          if (static_cast<std::size_t>(x) >= f.values.size()) {
            throw InputError("no sample for c(" + std::to_string(x) + "); " + std::to_string(f.values.size()) +
                             " values given");
          }
          return floor_of(f.values[static_cast<std::size_t>(x)]);
        }
      },
      spec);
}

std::vector<Integer> ranks_from_function(const FunctionSpec& spec, int n) {
  validate(spec);
  if (n < 1) throw InputError("n must be >= 1, got " + std::to_string(n));
  std::vector<Integer> ranks(static_cast<std::size_t>(n) + 1, Integer(0));
  for (int j = 1; j <= n; ++j) {
    Integer v = floor_at(spec, j);
    if (v > 0) ranks[static_cast<std::size_t>(j)] = std::move(v);
  }
  return ranks;
}

}  // namespace reeb

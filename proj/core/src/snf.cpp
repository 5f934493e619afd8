#include "reeb/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "reeb/errors.hpp"

namespace reeb {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                     std::to_string(entries_.size()) + " entries");
  }
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Integer> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix rows");
    for (long v : row) entries.emplace_back(v);
  }
  return IntMatrix(r, c, std::move(entries));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw InputError("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " by " +
                     std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) swap(a(i, c1), a(i, c2));
}

// row[dst] -= q * row[src]
void sub_row(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
  for (std::size_t j = from; j < a.cols(); ++j) a(dst, j) -= q * a(src, j);
}

void sub_col(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
  for (std::size_t i = from; i < a.rows(); ++i) a(i, dst) -= q * a(i, src);
}

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Position of the least nonzero |entry| in the block [t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || cmpabs(a(i, j), a(best->first, best->second)) < 0) best = {{i, j}};
    }
  }
  return best;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  SmithForm out;
  const std::size_t limit = std::min(a.rows(), a.cols());
  Integer q;
  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = smallest_entry(a, t);
    if (!pivot) break;
    swap_rows(a, t, pivot->first);
    swap_cols(a, t, pivot->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        sub_row(a, i, t, q, t);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        sub_col(a, j, t, q, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it up and repeat.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
          if (a(i, t) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) bi = i, bj = t;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(t, j) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) bi = t, bj = j;
        }
        swap_rows(a, t, bi);
        swap_cols(a, t, bj);
        continue;
      }
      // Row and column are clear. Enforce the divisibility chain by folding
      // an offending row into the pivot row.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            sub_row(a, t, i, Integer(-1), t);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    out.diagonal.push_back(abs(a(t, t)));
  }
  out.rank = out.diagonal.size();
  return out;
}

ChainComplex::ChainComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
  if (dims_.empty()) throw InputError("chain complex needs at least degree 0");
  if (boundaries_.size() != dims_.size() - 1) {
    throw InputError("expected " + std::to_string(dims_.size() - 1) + " boundary matrices, got " +
                     std::to_string(boundaries_.size()));
  }
  for (std::size_t k = 1; k < dims_.size(); ++k) {
    const IntMatrix& d = boundaries_[k - 1];
    if (d.rows() != dims_[k - 1] || d.cols() != dims_[k]) {
      throw InputError("boundary d_" + std::to_string(k) + " has shape " + std::to_string(d.rows()) + "x" +
                       std::to_string(d.cols()) + ", expected " + std::to_string(dims_[k - 1]) + "x" +
                       std::to_string(dims_[k]));
    }
  }
  for (std::size_t k = 1; k + 1 < dims_.size(); ++k) {
    if (!(boundaries_[k - 1] * boundaries_[k]).is_zero()) {
      throw InputError("d_" + std::to_string(k) + " * d_" + std::to_string(k + 1) + " is nonzero");
    }
  }
}

std::size_t ChainComplex::cells(int k) const {
  if (k < 0 || k > top_degree()) return 0;
  return dims_[static_cast<std::size_t>(k)];
}

IntMatrix ChainComplex::boundary(int k) const {
  if (k >= 1 && k <= top_degree()) return boundaries_[static_cast<std::size_t>(k) - 1];
  return IntMatrix(cells(k - 1), cells(k));
}

std::vector<AbelianGroup> homology(const ChainComplex& c) {
  const int top = c.top_degree();
  std::vector<SmithForm> forms;
  forms.reserve(static_cast<std::size_t>(top) + 2);
  for (int k = 0; k <= top + 1; ++k) forms.push_back(smith_normal_form(c.boundary(k)));

  std::vector<AbelianGroup> out;
  out.reserve(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    const auto& incoming = forms[static_cast<std::size_t>(k) + 1];
    Integer rank = Integer(c.cells(k)) - Integer(forms[static_cast<std::size_t>(k)].rank) - Integer(incoming.rank);
    std::vector<Integer> torsion;
    for (const auto& d : incoming.diagonal) {
      if (d > 1) torsion.push_back(d);
    }
    out.emplace_back(std::move(rank), std::move(torsion));
  }
  return out;
}

ChainComplex tensor(const ChainComplex& c, const ChainComplex& d) {
  const int top_c = c.top_degree();
  const int top_d = d.top_degree();
  const int top = top_c + top_d;

  // offset[k][p]: index of the first basis element x (x) y with |x| = p in degree k.
  std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(top) + 1,
                                               std::vector<std::size_t>(static_cast<std::size_t>(top_c) + 1, 0));
  std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) {
    std::size_t count = 0;
    for (int p = 0; p <= top_c; ++p) {
      offset[k][p] = count;
      const int q = k - p;
      if (q < 0 || q > top_d) continue;
      count += c.cells(p) * d.cells(q);
    }
    dims[static_cast<std::size_t>(k)] = count;
  }

  std::vector<IntMatrix> boundaries;
  for (int k = 1; k <= top; ++k) {
    IntMatrix m(dims[k - 1], dims[k]);
    for (int p = 0; p <= top_c; ++p) {
      const int q = k - p;
      if (q < 0 || q > top_d) continue;
      const std::size_t nc = c.cells(p);
      const std::size_t nd = d.cells(q);
      const IntMatrix dc = c.boundary(p);
      const IntMatrix dd = d.boundary(q);
      const bool odd = (p % 2) != 0;
      for (std::size_t x = 0; x < nc; ++x) {
        for (std::size_t y = 0; y < nd; ++y) {
          const std::size_t col = offset[k][p] + x * nd + y;
          if (p >= 1) {
            const std::size_t nd_q = d.cells(q);
            for (std::size_t x2 = 0; x2 < c.cells(p - 1); ++x2) {
              if (dc(x2, x) == 0) continue;
              m(offset[k - 1][p - 1] + x2 * nd_q + y, col) += dc(x2, x);
            }
          }
          if (q >= 1) {
            const std::size_t nd_q1 = d.cells(q - 1);
            for (std::size_t y2 = 0; y2 < nd_q1; ++y2) {
              if (dd(y2, y) == 0) continue;
              if (odd) {
                m(offset[k - 1][p] + x * nd_q1 + y2, col) -= dd(y2, y);
              } else {
                m(offset[k - 1][p] + x * nd_q1 + y2, col) += dd(y2, y);
              }
            }
          }
        }
      }
    }
    boundaries.push_back(std::move(m));
  }
  return ChainComplex(std::move(dims), std::move(boundaries));
}

ChainComplex sphere_complex(int d) {
  if (d < 0) throw InputError("sphere dimension " + std::to_string(d) + " is negative");
  if (d == 0) return ChainComplex({1}, {});
  std::vector<std::size_t> dims(static_cast<std::size_t>(d) + 1, 0);
  dims.front() = 1;
  dims.back() = 1;
  std::vector<IntMatrix> boundaries;
  for (int k = 1; k <= d; ++k) boundaries.emplace_back(dims[k - 1], dims[k]);
  return ChainComplex(std::move(dims), std::move(boundaries));
}

}  // namespace reeb

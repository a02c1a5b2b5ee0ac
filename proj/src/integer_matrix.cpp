#include "eqcut/integer_matrix.hpp"

#include <utility>

#include "eqcut/character.hpp"

namespace eqcut {

namespace {

struct ExtendedGcd {
  std::int64_t g, x, y;  // g = x a + y b, g >= 0
};

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = checked::sub(old_r, checked::mul(q, r));
    std::swap(old_r, r);
    old_s = checked::sub(old_s, checked::mul(q, s));
    std::swap(old_s, s);
    old_t = checked::sub(old_t, checked::mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {checked::neg(old_r), checked::neg(old_s), checked::neg(old_t)};
  return {old_r, old_s, old_t};
}

// Replaces columns (i, j) of m by (a*ci + b*cj, c*ci + d*cj).
void combine_columns(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c,
                     std::int64_t d) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::int64_t ci = m(r, i), cj = m(r, j);
    m(r, i) = checked::add(checked::mul(a, ci), checked::mul(b, cj));
    m(r, j) = checked::add(checked::mul(c, ci), checked::mul(d, cj));
  }
}

void swap_columns(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::int64_t> IntMatrix::apply(const std::vector<std::int64_t>& x) const {
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] = checked::add(out[r], checked::mul((*this)(r, c), x[c]));
  return out;
}

std::vector<std::vector<std::int64_t>> ColumnEchelon::kernel_basis() const {
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t c = rank; c < transform.cols(); ++c) basis.push_back(transform.column(c));
  return basis;
}

ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon out{a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& h = out.reduced;
  IntMatrix& v = out.transform;

  std::size_t pivot_col = 0;
  for (std::size_t row = 0; row < h.rows() && pivot_col < h.cols(); ++row) {
    // Fold every column right of the pivot into the pivot column via gcd steps
    // until it alone carries a nonzero entry in this row.
    for (std::size_t c = pivot_col + 1; c < h.cols(); ++c) {
      std::int64_t p = h(row, pivot_col), q = h(row, c);
      if (q == 0) continue;
      if (p == 0) {
        swap_columns(h, pivot_col, c);
        swap_columns(v, pivot_col, c);
        continue;
      }
      auto [g, x, y] = extended_gcd(p, q);
      // [x  -q/g; y  p/g] has determinant 1.
      std::int64_t qg = q / g, pg = p / g;
      combine_columns(h, pivot_col, c, x, y, checked::neg(qg), pg);
      combine_columns(v, pivot_col, c, x, y, checked::neg(qg), pg);
    }
    if (h(row, pivot_col) != 0) ++pivot_col;
  }
  out.rank = pivot_col;
  return out;
}

std::size_t rank(const IntMatrix& a) { return column_echelon(a).rank; }

}  // namespace eqcut

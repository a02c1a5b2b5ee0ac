#pragma once

// Small dense integer matrices with exact, unimodular elimination.

#include <cstdint>
#include <vector>

namespace eqcut {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::int64_t> column(std::size_t c) const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// A * V = H with V unimodular and H in column echelon form: the first
/// `rank` columns of H are nonzero with strictly increasing pivot rows, the
/// rest are zero. The last cols - rank columns of V are a Z-basis of ker A.
struct ColumnEchelon {
  IntMatrix reduced;    // H
  IntMatrix transform;  // V
  std::size_t rank = 0;

  std::vector<std::vector<std::int64_t>> kernel_basis() const;
};

/// Exact elimination by extended-gcd column operations; throws
/// OverflowError rather than wrapping.
ColumnEchelon column_echelon(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

}  // namespace eqcut

#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <initializer_list>
#include <string>
#include <vector>

namespace ksix {

using Int = mpz_class;

// Dense row-major matrix over arbitrary-precision integers. All arithmetic is
// exact; there is no fixed-width fast path anywhere in the library.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix row_vector(const std::vector<Int>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Int>& v);

  IntMatrix mul(const IntMatrix& rhs) const;  // parallel above a size threshold
  IntMatrix add(const IntMatrix& rhs) const;
  IntMatrix sub(const IntMatrix& rhs) const;
  IntMatrix negated() const;
  IntMatrix scaled(const Int& c) const;
  IntMatrix transposed() const;

  // Stacks rhs below/right of *this; both operands may be empty-dimensioned.
  IntMatrix vstack(const IntMatrix& below) const;
  IntMatrix hstack(const IntMatrix& right) const;
  IntMatrix take_rows(std::size_t first, std::size_t count) const;
  IntMatrix take_cols(const std::vector<std::size_t>& which) const;

  bool is_zero() const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += c * row[src]
  void row_axpy(std::size_t dst, std::size_t src, const Int& c);
  void col_axpy(std::size_t dst, std::size_t src, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Quotient rounded to the nearest integer (ties toward zero); the remainder
// a - b*round_div(a,b) has absolute value at most |b|/2, which is what keeps
// entry growth in the elimination sweeps under control.
Int round_div(const Int& a, const Int& b);

// a mod m in [0, m) for m > 0; identity for m == 0 (free coordinate).
Int pos_mod(const Int& a, const Int& m);

}  // namespace ksix

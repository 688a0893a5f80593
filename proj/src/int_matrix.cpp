#include "ksix/int_matrix.hpp"

#include <sstream>

#include "ksix/errors.hpp"
#include "ksix/parallel.hpp"

namespace ksix {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require(row.size() == c, "IntMatrix::from_rows: ragged rows");
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::row_vector(const std::vector<Int>& v) {
  IntMatrix m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void IntMatrix::set_row(std::size_t i, const std::vector<Int>& v) {
  require(v.size() == cols_, "IntMatrix::set_row: width mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
  require(cols_ == rhs.rows_, "IntMatrix::mul: inner dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  const std::size_t work = rows_ * cols_ * rhs.cols_;
  if (par::worth_it(work)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows_; ++i) {
      Int acc;
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& aik = at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          acc = aik * rhs.at(k, j);
          out.at(i, j) += acc;
        }
      }
    }
#endif
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return a.mul(b); }

IntMatrix IntMatrix::add(const IntMatrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "IntMatrix::add: shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += rhs.e_[i];
  return out;
}

IntMatrix IntMatrix::sub(const IntMatrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "IntMatrix::sub: shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= rhs.e_[i];
  return out;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix out = *this;
  for (auto& x : out.e_) x = -x;
  return out;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
  IntMatrix out = *this;
  for (auto& x : out.e_) x *= c;
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0 && below.cols_ == 0) return *this;
  require(cols_ == below.cols_, "IntMatrix::vstack: width mismatch");
  IntMatrix out(rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
  return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  if (rows_ == 0 && cols_ == 0) return right;
  if (right.rows_ == 0 && right.cols_ == 0) return *this;
  require(rows_ == right.rows_, "IntMatrix::hstack: height mismatch");
  IntMatrix out(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right.at(i, j);
  }
  return out;
}

IntMatrix IntMatrix::take_rows(std::size_t first, std::size_t count) const {
  require(first + count <= rows_, "IntMatrix::take_rows: out of range");
  IntMatrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(first + i, j);
  return out;
}

IntMatrix IntMatrix::take_cols(const std::vector<std::size_t>& which) const {
  IntMatrix out(rows_, which.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < which.size(); ++j) {
      require(which[j] < cols_, "IntMatrix::take_cols: out of range");
      out.at(i, j) = at(i, which[j]);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::row_axpy(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::col_axpy(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

Int round_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int twice = 2 * abs(r);
  if (twice > abs(b)) q += (sgn(a) == sgn(b)) ? 1 : -1;
  return q;
}

Int pos_mod(const Int& a, const Int& m) {
  if (m == 0) return a;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace ksix

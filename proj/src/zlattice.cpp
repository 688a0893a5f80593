#include "ksix/zlattice.hpp"

#include "ksix/errors.hpp"

namespace ksix {

HnfResult hnf_row(const IntMatrix& a) {
  HnfResult res;
  res.h = a;
  res.t = IntMatrix::identity(a.rows());
  IntMatrix& h = res.h;
  IntMatrix& t = res.t;
  const std::size_t m = a.rows(), n = a.cols();

  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    // Euclid on the entries of column j at rows >= r until one survivor.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (h.at(i, j) != 0 && (best == m || abs(h.at(i, j)) < abs(h.at(best, j)))) best = i;
      if (best == m) break;  // column clear below r
      h.swap_rows(r, best);
      t.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h.at(i, j) == 0) continue;
        Int q = round_div(h.at(i, j), h.at(r, j));
        h.row_axpy(i, r, -q);
        t.row_axpy(i, r, -q);
        if (h.at(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, j) == 0) continue;
    if (h.at(r, j) < 0) {
      h.negate_row(r);
      t.negate_row(r);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(r, j).get_mpz_t());
      if (q != 0) {
        h.row_axpy(i, r, -q);
        t.row_axpy(i, r, -q);
      }
    }
    res.pivot_cols.push_back(j);
    ++r;
  }
  res.rank = r;
  return res;
}

IntMatrix left_kernel(const IntMatrix& a) {
  HnfResult res = hnf_row(a);
  return res.t.take_rows(res.rank, a.rows() - res.rank);
}

std::optional<std::vector<Int>> solve_left(const IntMatrix& a, const std::vector<Int>& b) {
  require(b.size() == a.cols(), "solve_left: width mismatch");
  HnfResult res = hnf_row(a);
  std::vector<Int> residual = b;
  std::vector<Int> y(a.rows());
  for (std::size_t i = 0; i < res.rank; ++i) {
    std::size_t j = res.pivot_cols[i];
    const Int& piv = res.h.at(i, j);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), residual[j].get_mpz_t(), piv.get_mpz_t());
    if (r != 0) return std::nullopt;
    if (q != 0) {
      y[i] = q;
      for (std::size_t c = 0; c < a.cols(); ++c) residual[c] -= q * res.h.at(i, c);
    }
  }
  for (const Int& v : residual)
    if (v != 0) return std::nullopt;
  // x = y * t, with y zero on the kernel rows.
  std::vector<Int> x(a.rows());
  for (std::size_t i = 0; i < res.rank; ++i) {
    if (y[i] == 0) continue;
    for (std::size_t c = 0; c < a.rows(); ++c) x[c] += y[i] * res.t.at(i, c);
  }
  return x;
}

IntMatrix row_space_basis(const IntMatrix& a) {
  HnfResult res = hnf_row(a);
  return res.h.take_rows(0, res.rank);
}

bool lattice_contains(const IntMatrix& lattice_rows, const std::vector<Int>& v) {
  return solve_left(lattice_rows, v).has_value();
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0,
          "lattice_equal: ambient dimension mismatch");
  return row_space_basis(a) == row_space_basis(b);
}

bool lattice_subset(const IntMatrix& sub, const IntMatrix& super) {
  for (std::size_t i = 0; i < sub.rows(); ++i)
    if (!lattice_contains(super, sub.row(i))) return false;
  return true;
}

Int determinant(const IntMatrix& a) {
  require(a.rows() == a.cols(), "determinant: square matrix required");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

}  // namespace ksix

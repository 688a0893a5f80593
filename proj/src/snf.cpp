#include "ksix/snf.hpp"

#include <cstddef>
#include <vector>

#include "ksix/parallel.hpp"

namespace ksix {

namespace {

// Position of the entry of minimal absolute value among the nonzero entries of
// d[t.., t..], row-major on ties; returns false when the submatrix is zero.
bool min_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& x = d.at(i, j);
      if (x == 0) continue;
      if (!found || abs(x) < abs(d.at(pi, pj))) {
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfResult res{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  IntMatrix& vinv = res.vinv;

  const std::size_t steps = m < n ? m : n;
  std::vector<Int> colq(n);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi, pj;
    if (!min_pivot(d, t, pi, pj)) break;
    while (true) {
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);
      vinv.swap_rows(t, pj);

      bool clean = true;
      const std::size_t rwork = (m - t) * (n - t);
      const bool wide = par::worth_it(rwork);
      // Row sweep: each row below t is reduced independently against row t.
      if (wide) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(&& : clean)
        for (std::size_t i = t + 1; i < m; ++i) {
          if (d.at(i, t) == 0) continue;
          Int q = round_div(d.at(i, t), d.at(t, t));
          d.row_axpy(i, t, -q);
          u.row_axpy(i, t, -q);
          if (d.at(i, t) != 0) clean = false;
        }
#endif
      } else {
        for (std::size_t i = t + 1; i < m; ++i) {
          if (d.at(i, t) == 0) continue;
          Int q = round_div(d.at(i, t), d.at(t, t));
          d.row_axpy(i, t, -q);
          u.row_axpy(i, t, -q);
          if (d.at(i, t) != 0) clean = false;
        }
      }
      // Column sweep. The inverse transform accumulates into row t of vinv,
      // which every column op targets, so the quotients are recorded in the
      // parallel phase and row t is updated serially afterwards.
      if (wide) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(&& : clean)
        for (std::size_t j = t + 1; j < n; ++j) {
          colq[j] = 0;
          if (d.at(t, j) == 0) continue;
          Int q = round_div(d.at(t, j), d.at(t, t));
          d.col_axpy(j, t, -q);
          v.col_axpy(j, t, -q);
          colq[j] = q;
          if (d.at(t, j) != 0) clean = false;
        }
#endif
        for (std::size_t j = t + 1; j < n; ++j)
          if (colq[j] != 0) vinv.row_axpy(t, j, colq[j]);
      } else {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d.at(t, j) == 0) continue;
          Int q = round_div(d.at(t, j), d.at(t, t));
          d.col_axpy(j, t, -q);
          v.col_axpy(j, t, -q);
          vinv.row_axpy(t, j, q);
          if (d.at(t, j) != 0) clean = false;
        }
      }
      if (!clean) {
        min_pivot(d, t, pi, pj);
        continue;
      }
      // Pivot must divide the remaining submatrix; pulling an offending row up
      // into row t re-enters the Euclidean descent.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n && fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.row_axpy(t, i, 1);
            u.row_axpy(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
      min_pivot(d, t, pi, pj);
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return res;
}

}  // namespace ksix

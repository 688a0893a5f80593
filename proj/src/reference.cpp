#include "ksix/errors.hpp"
#include "ksix/snf.hpp"

namespace ksix::ref {

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.rows(), "ref::matmul: inner dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfResult res{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};
  IntMatrix& d = res.d;

  auto find_pivot = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (d.at(i, j) == 0) continue;
        if (!found || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  };

  const std::size_t steps = m < n ? m : n;
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi, pj;
    if (!find_pivot(t, pi, pj)) break;
    while (true) {
      d.swap_rows(t, pi);
      res.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      res.v.swap_cols(t, pj);
      res.vinv.swap_rows(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = round_div(d.at(i, t), d.at(t, t));
        d.row_axpy(i, t, -q);
        res.u.row_axpy(i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = round_div(d.at(t, j), d.at(t, t));
        d.col_axpy(j, t, -q);
        res.v.col_axpy(j, t, -q);
        res.vinv.row_axpy(t, j, q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        find_pivot(t, pi, pj);
        continue;
      }
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n && fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.row_axpy(t, i, 1);
            res.u.row_axpy(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
      find_pivot(t, pi, pj);
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      res.u.negate_row(t);
    }
  }
  return res;
}

}  // namespace ksix::ref

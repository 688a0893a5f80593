#pragma once

#include "ksix/int_matrix.hpp"

namespace ksix {

// Smith normal form u * a * v = d with u, v unimodular and the diagonal of d
// nonnegative with d_1 | d_2 | ... . vinv is maintained alongside v because
// the group layer needs both directions of the coordinate change.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix vinv;
};

// Eliminates with the minimal-absolute-value pivot and nearest-integer
// quotients. The row and column sweeps run under OpenMP above the size
// threshold in parallel.hpp; the output is identical to ref::smith_normal_form
// for every input.
SnfResult smith_normal_form(const IntMatrix& a);

namespace ref {
// Serial reference kernels kept for testing and benchmarking.
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
SnfResult smith_normal_form(const IntMatrix& a);
}  // namespace ref

}  // namespace ksix

#pragma once

#include <optional>
#include <vector>

#include "ksix/int_matrix.hpp"

// Exact integer lattice routines. Vectors are rows throughout the library:
// a lattice is the row span of a matrix, a homomorphism acts on the right.

namespace ksix {

struct HnfResult {
  IntMatrix h;        // row Hermite normal form of the input (canonical)
  IntMatrix t;        // unimodular transform with t * input = h
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row of h
};

// Canonical row Hermite form: pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows at the bottom.
HnfResult hnf_row(const IntMatrix& a);

// Basis of {x : x * a = 0}, one basis vector per row (may have zero rows).
IntMatrix left_kernel(const IntMatrix& a);

// Canonical particular solution of x * a = b (b a row vector), if any.
// The solution has zero coefficients along the kernel directions of the
// HNF transform, so it is deterministic.
std::optional<std::vector<Int>> solve_left(const IntMatrix& a, const std::vector<Int>& b);

// Canonical basis of the row span: the nonzero rows of the HNF.
IntMatrix row_space_basis(const IntMatrix& a);

bool lattice_contains(const IntMatrix& lattice_rows, const std::vector<Int>& v);
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);
bool lattice_subset(const IntMatrix& sub, const IntMatrix& super);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

}  // namespace ksix

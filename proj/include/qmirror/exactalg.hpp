#pragma once

// Exact integer and rational linear algebra: Smith/Hermite normal forms,
// lattice kernels, cokernel maps, maximal minors, unimodular inverses.

#include <vector>

#include "qmirror/scalar.hpp"

namespace qmirror {

/// All k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

/// Rows (or columns) of `m` selected by `indices`, in the given order.
IntMatrix select_rows(const IntMatrix& m, const std::vector<int>& indices);
IntMatrix select_cols(const IntMatrix& m, const std::vector<int>& indices);

/// Determinant by Bareiss fraction-free elimination. Empty matrix has determinant 1.
Integer determinant(const IntMatrix& m);

Index rank(const IntMatrix& m);
Index rank(const RatMatrix& m);

struct SmithForm {
  IntMatrix left;      // unimodular, rows x rows
  IntMatrix diagonal;  // left * m * right
  IntMatrix right;     // unimodular, cols x cols
  Index rank = 0;
};

/// Smith normal form with transforms; diagonal entries are nonnegative and
/// each divides the next.
SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form with zero rows removed: pivots positive,
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Columns form a Z-basis of ker(m), canonicalized so that the transposed
/// basis is in Hermite normal form (first nonzero entry of each vector is
/// positive). A trivial kernel yields a cols x 0 matrix.
IntMatrix integer_kernel(const IntMatrix& m);

/// The canonical cokernel map beta (d x n) of an injective iota (n x k):
/// rows are the Hermite-normal basis of the left kernel of iota.
IntMatrix cokernel_map(const IntMatrix& iota);

/// Maximal minors in lexicographic order of row subsets; requires rows >= cols.
std::vector<Integer> maximal_minors(const IntMatrix& m);

bool is_totally_unimodular(const IntMatrix& m);

IntMatrix invert_unimodular(const IntMatrix& p);

/// Unique solution of a square nonsingular rational system.
RatVector solve(const RatMatrix& a, const RatVector& b);

}  // namespace qmirror

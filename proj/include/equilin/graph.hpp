#pragma once

#include <array>

#include "equilin/schur.hpp"

namespace equilin {

// The seven invariant subspaces of R^{n x n} under simultaneous row/column
// permutation:
//   v0 = b*I                      v1 = a*(J - I)
//   v2 = zero-trace diagonal      v3 = r 1^T (r zero-sum)   v4 = 1 c^T (c zero-sum)
//   v5 antisymmetric, zero row sums
//   v6 symmetric, zero diagonal, zero row sums
struct GraphDecomposition {
    int n = 0;
    std::array<Mat, 7> parts;

    Mat reconstruct() const;
    const Mat& v(int i) const { return parts[i]; }
};

// O(n^2) decomposition; n >= 3 (at n = 3 the last subspace is zero-dimensional
// and v6 is returned as the zero matrix). For n = 2 use decompose_matrix_n2.
GraphDecomposition decompose_matrix(const Mat& a);

// R^{2x2} = V0 + V1 + V2 + V3 (V4..V6 are absorbed / zero at n = 2).
std::array<Mat, 4> decompose_matrix_n2(const Mat& a);

// Parameter count of the equivariant layer on n x n matrices:
// 15 for n >= 4, 14 for n = 3, 8 for n = 2.
int ign_basis_dim(int n);

// Slot layout by n: Trivial {v0, v1}, Vec(0,n) {v2, v3, v4}, GraphAntisym {v5},
// GraphSymZeroDiag {v6}; the latter classes drop out for small n.
IsoMapTable graph_iso_table(int n);
Decomposition graph_decomposition(const Mat& a);

Mat ign_layer(const SchurCoefficients& coeffs, const Mat& a);

}  // namespace equilin

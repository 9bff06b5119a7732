#pragma once

#include "equilin/schur.hpp"

namespace equilin {

// Split of a vector into its constant part and its zero-sum residual, the two
// invariant subspaces of the permutation action on R^n.
struct DeepSetsDecomposition {
    int n = 0;
    double mean = 0.0;
    Vec residual;

    Vec mean_part() const { return Vec(n, mean); }
    Vec reconstruct() const;
};

DeepSetsDecomposition decompose_vector(const Vec& x);  // n >= 2

// a * mean(x) * 1 + b * (x - mean(x) * 1)
Vec deepsets_layer(double a, double b, const Vec& x);

// Canonical slots: Trivial (coefficient along 1/sqrt(n)) and Vec(0, n) (raw
// zero-sum residual).
IsoMapTable deepsets_iso_table(int n);
Decomposition deepsets_decomposition(const Vec& x);

}  // namespace equilin

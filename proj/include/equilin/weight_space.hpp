#pragma once

#include "equilin/schur.hpp"

namespace equilin {

// Multiplicities of the irreducible classes inside an MLP weight space:
// alpha copies of the trivial class, beta[m-1] copies of Vec(m) for each
// hidden layer m, and one matrix class per middle weight block.
struct DwsMultiplicities {
    int alpha = 0;
    std::vector<int> beta;                 // beta[m-1] for m = 1..M-1
    std::vector<IsoClassLabel> mat_classes;

    long layer_param_count() const;        // alpha^2 + sum beta^2 + #mat classes
};

// Counted by enumerating the per-block decompositions (bias splits, column and
// row splits of the first/last weights, mean/row/column/doubly-zero-sum splits
// of middle weights). For M >= 3 the closed forms
//   alpha = d0 + 2 dM + 2M - 3, beta_1 = d0 + 2, beta_{M-1} = dM + 2, beta_m = 3
// are asserted against the enumeration.
DwsMultiplicities dws_multiplicities(const ArchSpec& arch);

// Slot layout and canonical coordinates for every location. Traversal order:
// for m = 1: W1 column means, W1 column residuals, b1 mean, b1 residual;
// for 2 <= m <= M-1: Wm mean, Wm column part, Wm row part, Wm matrix part,
// bm mean, bm residual; for m = M: WM row means, WM row residuals, bM entries.
IsoMapTable dws_iso_table(const ArchSpec& arch);

Decomposition decompose_weightspace(const WeightSpacePoint& v);

WeightSpacePoint dws_layer(const SchurCoefficients& coeffs, const WeightSpacePoint& v);

long dws_param_count(const ArchSpec& arch);

}  // namespace equilin

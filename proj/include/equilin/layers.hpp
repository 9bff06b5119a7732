#pragma once

#include "equilin/schur.hpp"

namespace equilin {

// Dispatch over the three base spaces (vectors, matrices under conjugation,
// weight spaces). Tuple specs are handled by the wreath module.
IsoMapTable iso_table_for(const ActionSpec& spec);
Decomposition decompose_for(const ActionSpec& spec, const Vec& flat);

// The equivariant layer with the given coefficients, on flat ambient vectors.
Vec apply_layer(const ActionSpec& spec, const SchurCoefficients& coeffs, const Vec& flat);

// Materialize the layer as a D x D matrix (columns = images of basis vectors).
Mat layer_matrix(const ActionSpec& spec, const SchurCoefficients& coeffs);

// Closed-form commutant dimension: 2 for vectors, 15/14/8 for matrices,
// alpha^2 + sum beta^2 + (M-2) for weight spaces.
long closed_form_dim(const ActionSpec& spec);

}  // namespace equilin

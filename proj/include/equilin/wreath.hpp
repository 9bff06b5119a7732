#pragma once

#include "equilin/layers.hpp"

namespace equilin {

// Orthonormal basis of the subspace fixed by every group element, one vector
// per trivial summand of the base space: {1/sqrt(n)} for vectors,
// {I/sqrt(n), (J-I)/sqrt(n^2-n)} for matrices, the alpha normalized constant
// patterns for weight spaces.
struct FixedBasis {
    ActionSpec base_space;
    std::vector<Vec> vectors;

    int size() const { return static_cast<int>(vectors.size()); }
    // Max deviation from g e_i = e_i over the base generators, and from
    // pairwise orthonormality.
    double fixed_point_residual() const;
    double orthonormality_residual() const;
};

FixedBasis fixed_basis(const ActionSpec& spec);

// Parameters of a tuple layer: the s x s block of cross-slot sum terms, the
// shared base-space layer applied slot-wise, and optional extra blocks for a
// transitive subgroup H < S_k (one k x k H-equivariant map plus one s x s
// coefficient block each).
struct WreathCoefficients {
    Mat a;                       // s x s
    SchurCoefficients siamese;
    std::vector<Mat> h_maps;     // each k x k
    std::vector<Mat> h_coeffs;   // each s x s, aligned with h_maps
};

// L(v_1..v_k)_q = sum_{ij} a_ij (sum_l <v_l, e_i>) e_j + Lhat(v_q)
// plus, for each extra block (T, C): sum_{ij} C_ij (T x^i)_q e_j with
// x^i_l = <v_l, e_i>. Inner products are the standard l2 on flat coordinates.
std::vector<Vec> wreath_layer(const WreathCoefficients& coeffs, const FixedBasis& basis,
                              const std::vector<Vec>& tuple);

// Materialized (k D) x (k D) matrix of a tuple layer.
Mat wreath_layer_matrix(const WreathCoefficients& coeffs, const FixedBasis& basis, int k);
Mat siamese_layer_matrix(const ActionSpec& base, const SchurCoefficients& coeffs, int k);

// (h - 1) * s^2
long nonsiamese_count(long s, long h);

// Dimension of the commutant of the subgroup generated by h_gens acting on
// R^k, computed by the null-space oracle. Generators must act transitively.
int subgroup_h(const std::vector<Permutation>& h_gens, int k);

// Indicator matrices of the orbits of H on ordered pairs: a canonical basis
// of the H-commutant on R^k. The diagonal orbit is the identity matrix and is
// excluded unless include_identity is set.
std::vector<Mat> h_orbit_maps(const std::vector<Permutation>& h_gens, int k,
                              bool include_identity = false);

bool is_transitive(const std::vector<Permutation>& gens, int k);

// Number of Siamese layers = commutant dimension of the base space.
long siamese_count(const ActionSpec& base);

}  // namespace equilin

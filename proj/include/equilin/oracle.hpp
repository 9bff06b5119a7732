#pragma once

#include <functional>

#include "equilin/groups.hpp"

namespace equilin {

// A group action reduced to what the solver needs: the ambient dimension and
// the coordinate permutation of each generator.
struct AmbientRep {
    int dim = 0;
    std::vector<Permutation> gens;
};

AmbientRep ambient_rep(const ActionSpec& spec);

// Trivial action matching another rep's generator list (for invariant maps).
AmbientRep trivial_rep(int generator_count, int dim = 1);

struct EquivariantBasis {
    int dim = 0;
    std::vector<Mat> basis;  // D_out x D_in matrices spanning the commutant
};

// Ground truth: stack the commutation constraints L P_in(g) - P_out(g) L = 0
// over all generators and return the null space via row reduction (partial
// pivoting, pivot threshold 1e-9 relative). Generator lists must be aligned:
// gens_out[i] is the image of gens_in[i] under the same abstract group.
EquivariantBasis equivariant_basis(const AmbientRep& in, const AmbientRep& out,
                                   long budget = 20000);
EquivariantBasis equivariant_basis(const ActionSpec& spec, long budget = 20000);
// Maps to the trivial one-dimensional action; dim = number of invariant maps.
EquivariantBasis invariant_basis(const ActionSpec& spec, long budget = 20000);

struct EquivarianceReport {
    int trials = 0;
    double max_relative_violation = 0.0;
    uint64_t seed = 0;
    double tol = 0.0;
    bool pass = false;
};

// Randomized equivariance check of a black-box map on the flat ambient space:
// per trial, a standard-normal input and a word of length <= 4 in the
// generators; reports the max of |layer(g x) - g layer(x)|_inf relative to
// |layer(x)|_inf.
EquivarianceReport check_equivariance(const std::function<Vec(const Vec&)>& layer,
                                      const ActionSpec& spec, int trials, double tol,
                                      uint64_t seed);

// Number of orbits of the generated group acting on ordered index pairs;
// equals the permutation-action commutant dimension by the orbital argument.
// Used as an independent cross-check of the null-space route.
long pair_orbit_count(const std::vector<Permutation>& gens, int n);

}  // namespace equilin

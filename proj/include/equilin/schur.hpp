#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "equilin/groups.hpp"

namespace equilin {

// Isomorphism class of an irreducible component. Two components admit a
// nonzero equivariant map between them exactly when their labels are equal.
enum class LabelTag {
    Trivial,             // one-dimensional, group acts trivially
    Vec,                 // zero-sum vectors in R^n permuted by factor m
    Mat,                 // doubly zero-sum matrices, rows by tau_m, cols by tau_{m-1}
    GraphAntisym,        // antisymmetric n x n with zero row sums
    GraphSymZeroDiag,    // symmetric n x n, zero diagonal, zero row sums
    TupleTrivialSym,     // constant tuples over a fixed base vector
    TupleTrivialZeroSum, // zero-sum coefficient tuples over a fixed base vector
    TupleLift,           // k-th power of a non-trivial base irreducible
};

struct IsoClassLabel {
    LabelTag tag = LabelTag::Trivial;
    std::array<int, 3> args{0, 0, 0};
    // TupleLift payload (inner class is never itself a tuple class).
    bool has_inner = false;
    LabelTag inner_tag = LabelTag::Trivial;
    std::array<int, 3> inner_args{0, 0, 0};

    auto operator<=>(const IsoClassLabel&) const = default;
    std::string to_string() const;
};

IsoClassLabel trivial_label();
IsoClassLabel vec_label(int m, int n);
IsoClassLabel mat_label(int m, int rows, int cols);
IsoClassLabel graph_antisym_label(int n);
IsoClassLabel graph_sym_zero_diag_label(int n);
IsoClassLabel tuple_trivial_sym_label();
IsoClassLabel tuple_trivial_zero_sum_label();
IsoClassLabel tuple_lift_label(const IsoClassLabel& inner);

// One irreducible component of a decomposed element: which class, which copy,
// and the component itself as a flat ambient-space vector.
struct IrrepComponent {
    IsoClassLabel label;
    int slot = 0;
    Vec data;
};

struct Decomposition {
    ActionSpec ambient;
    std::vector<IrrepComponent> components;

    Vec sum() const;
    const IrrepComponent* find(const IsoClassLabel& label, int slot) const;
};

struct SchurKey {
    IsoClassLabel label;
    int from = 0;
    int to = 0;
    auto operator<=>(const SchurKey&) const = default;
};

// The lambda parameters of an equivariant layer, keyed by (class, from, to).
// Absent keys mean zero.
struct SchurCoefficients {
    std::map<SchurKey, double> entries;

    void set(const IsoClassLabel& label, int from, int to, double value);
    double get(const IsoClassLabel& label, int from, int to) const;
    size_t size() const { return entries.size(); }
};

// Canonical coordinates of one slot: extract reads the canonical coordinate
// vector off a component lying in the subspace, embed writes canonical
// coordinates back at the slot's location. For same-label slots these
// conventions agree, so embed_j(extract_i(x)) is the canonical isomorphism
// L_{ij} scaled copies act through.
struct SlotMap {
    IsoClassLabel label;
    int slot = 0;
    std::function<Vec(const Vec&)> extract;  // ambient -> canonical
    std::function<Vec(const Vec&)> embed;    // canonical -> ambient
};

struct IsoMapTable {
    int ambient_dim = 0;
    std::vector<SlotMap> slots;

    const SlotMap* find(const IsoClassLabel& label, int slot) const;
    int multiplicity(const IsoClassLabel& label) const;
    std::map<IsoClassLabel, int> multiplicities() const;

    // lambda = 1 on every (label, i, i); reproduces the input when assembled.
    SchurCoefficients identity_coefficients() const;
    // All (label, i, j) unit-coefficient settings; spans every layer.
    std::vector<SchurCoefficients> unit_coefficient_basis() const;
};

// T(x) = sum over (label, i, j) of lambda_{label,i,j} L_{ij}(x_{label,i}).
// Components whose labels carry no coefficients contribute zero. Coefficient
// keys referencing slots absent from the table raise LayoutError.
Vec assemble_layer(const SchurCoefficients& coeffs, const Decomposition& decomp,
                   const IsoMapTable& iso_maps);

// Number of free parameters for given per-class multiplicities: sum of
// alpha_i^2.
long param_count(const std::vector<int>& multiplicities);

// Max absolute violation, over all components, of the defining constraints of
// the component's subspace (zero sums, antisymmetry, zero diagonal, embedding
// round trip). Callers divide by the input magnitude for a relative gate.
double decomposition_constraint_residual(const Decomposition& decomp,
                                         const IsoMapTable& iso_maps);

// Independent standard-normal value on every (label, i, j) pair of the table.
SchurCoefficients random_coefficients(const IsoMapTable& table, Rng& rng);

}  // namespace equilin

#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "equilin/linalg.hpp"

namespace equilin {

// Permutation on {0,...,n-1} stored as an image array: i -> images[i].
// Composition convention throughout: compose(a, b)(i) = a(b(i)).
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> imgs);  // validates bijection

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i]; }
    bool is_identity() const;

    Permutation inverse() const;

    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);
    static Permutation forward_cycle(int n);  // 0 -> 1 -> ... -> n-1 -> 0
};

Permutation compose(const Permutation& a, const Permutation& b);

// y_i = x_{p^{-1}(i)}
Vec act_vector(const Permutation& p, const Vec& x);

// result_{ij} = A_{p^{-1}(i), p^{-1}(j)}
Mat act_matrix(const Permutation& p, const Mat& a);

// P with P e_j = e_{p(j)}, so P x = act_vector(p, x) and
// act_matrix(p, A) = P A P^T.
Mat perm_matrix(const Permutation& p);

// One permutation per hidden layer of an MLP weight space.
struct MultiPermutation {
    std::vector<Permutation> parts;  // parts[m] acts on hidden layer m+1 (size d_{m+1})

    bool is_identity() const;
    MultiPermutation inverse() const;
    static MultiPermutation identity(const std::vector<int>& hidden_dims);
};

MultiPermutation compose(const MultiPermutation& a, const MultiPermutation& b);

// Layer widths d_0..d_M of an MLP; depth M = dims.size()-1.
struct ArchSpec {
    std::vector<int> dims;

    ArchSpec() = default;
    explicit ArchSpec(std::vector<int> d);  // validates M >= 2 and all dims >= 2

    int depth() const { return static_cast<int>(dims.size()) - 1; }
    std::vector<int> hidden_dims() const;  // d_1..d_{M-1}
    int flat_dim() const;                  // sum of d_m*d_{m-1} + d_m
    bool operator==(const ArchSpec& o) const { return dims == o.dims; }
};

// All weights and biases of an MLP: W_m is d_m x d_{m-1}, b_m has length d_m.
// Flat layout: W_1, b_1, W_2, b_2, ..., W_M, b_M (matrices row-major).
struct WeightSpacePoint {
    ArchSpec arch;
    std::vector<Mat> weights;
    std::vector<Vec> biases;

    static WeightSpacePoint zeros(const ArchSpec& arch);
    void validate() const;

    Vec flatten() const;
    static WeightSpacePoint unflatten(const ArchSpec& arch, const Vec& flat);
};

// Hidden permutations act on rows of W_m and entries of b_m via tau_m and on
// columns of W_m via tau_{m-1}; input and output indices are untouched.
WeightSpacePoint act_weightspace(const MultiPermutation& g, const WeightSpacePoint& v);

struct WreathElement;

using BaseElement = std::variant<Permutation, MultiPermutation>;
using GroupElement = std::variant<Permutation, MultiPermutation, WreathElement>;

// Element of G wr S_k: an outer permutation of the k slots plus one base-group
// element per slot. Acts on tuples by result_i = inner[outer(i)] * t[outer(i)].
struct WreathElement {
    Permutation outer;
    std::vector<BaseElement> inner;

    bool is_identity() const;
    WreathElement inverse() const;
};

WreathElement compose(const WreathElement& a, const WreathElement& b);

BaseElement base_inverse(const BaseElement& e);
BaseElement base_compose(const BaseElement& a, const BaseElement& b);

GroupElement element_inverse(const GroupElement& e);
GroupElement element_compose(const GroupElement& a, const GroupElement& b);

// Description of a concrete linear action: which space and which group.
struct ActionSpec {
    enum class Kind { VectorPerm, MatrixConj, WeightSpace, WreathTuple };

    Kind kind = Kind::VectorPerm;
    int n = 0;           // VectorPerm / MatrixConj
    ArchSpec arch;       // WeightSpace
    std::shared_ptr<const ActionSpec> base;  // WreathTuple
    int k = 0;           // WreathTuple
    // Optional generators of a transitive subgroup H <= S_k permuting the
    // slots; empty means the full S_k.
    std::vector<Permutation> outer_generators;

    static ActionSpec vector_perm(int n);
    static ActionSpec matrix_conj(int n);
    static ActionSpec weight_space(std::vector<int> dims);
    static ActionSpec wreath_tuple(ActionSpec base_spec, int k,
                                   std::vector<Permutation> outer_gens = {});

    int ambient_dim() const;
    void validate() const;
};

// Generating set of the acting group: {transposition(0,1), n-cycle} per
// symmetric-group factor (just the swap when n = 2), base generators embedded
// in slot 0 plus outer generators for wreath products.
std::vector<GroupElement> generators(const ActionSpec& spec);

BaseElement base_identity(const ActionSpec& base_spec);

// The permutation of flat ambient coordinates realizing the action of g, i.e.
// flatten(g * v) = act_vector(ambient_perm(spec, g), flatten(v)).
Permutation ambient_perm(const ActionSpec& spec, const GroupElement& g);

Vec act_ambient(const ActionSpec& spec, const GroupElement& g, const Vec& flat);

// Tuple action per the wreath product: result_i = inner[outer(i)] * t[outer(i)].
// Entries are flat base-space vectors.
std::vector<Vec> act_tuple(const WreathElement& w, const ActionSpec& base_spec,
                           const std::vector<Vec>& t);

Vec flatten_tuple(const std::vector<Vec>& t);
std::vector<Vec> unflatten_tuple(int k, int base_dim, const Vec& flat);

}  // namespace equilin

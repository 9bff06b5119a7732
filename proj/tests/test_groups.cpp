#include <doctest.h>

#include "equilin/groups.hpp"

using namespace equilin;

namespace {

Permutation cycle012() { return Permutation({1, 2, 0}); }  // 0->1->2->0

WeightSpacePoint random_point(Rng& rng, const ArchSpec& arch) {
    WeightSpacePoint v = WeightSpacePoint::zeros(arch);
    for (Mat& w : v.weights)
        for (double& x : w.data) x = rng.normal();
    for (Vec& b : v.biases)
        for (double& x : b) x = rng.normal();
    return v;
}

MultiPermutation random_multi(Rng& rng, const std::vector<int>& hidden) {
    MultiPermutation g = MultiPermutation::identity(hidden);
    for (Permutation& p : g.parts) {
        // Fisher-Yates on the image array
        for (int i = p.size() - 1; i > 0; --i)
            std::swap(p.images[i], p.images[rng.uniform_int(0, i)]);
    }
    return g;
}

}  // namespace

TEST_CASE("act_vector basics") {
    CHECK(act_vector(Permutation::identity(3), Vec{5, 7, 9}) == Vec{5, 7, 9});
    CHECK(act_vector(Permutation::transposition(3, 0, 1), Vec{5, 7, 9}) == Vec{7, 5, 9});
    CHECK(act_vector(cycle012(), Vec{1, 2, 3}) == Vec{3, 1, 2});
    CHECK_THROWS_AS(act_vector(Permutation::identity(3), Vec{1, 2}), DimensionError);
}

TEST_CASE("permutation validation and inverse") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidInputError);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidInputError);
    Rng rng(7);
    Permutation p = cycle012();
    Vec x{0.3, -1.2, 9.5};
    CHECK(act_vector(p.inverse(), act_vector(p, x)) == x);
    CHECK(compose(p, p.inverse()).is_identity());
}

TEST_CASE("act_matrix basics") {
    Mat id3 = Mat::identity(3);
    CHECK(rel_err(act_matrix(cycle012(), id3), id3) == 0.0);

    Mat e01(3, 3);
    e01(0, 1) = 1.0;
    Mat moved = act_matrix(Permutation::transposition(3, 0, 1), e01);
    Mat e10(3, 3);
    e10(1, 0) = 1.0;
    CHECK(rel_err(moved, e10) == 0.0);

    Rng rng(3);
    Mat a(4, 4);
    for (double& v : a.data) v = rng.normal();
    CHECK(rel_err(act_matrix(Permutation::identity(4), a), a) == 0.0);
}

TEST_CASE("act_matrix equals P A P^T") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.uniform_int(2, 6);
        Mat a(n, n);
        for (double& v : a.data) v = rng.normal();
        Permutation p = Permutation::identity(n);
        for (int i = n - 1; i > 0; --i) std::swap(p.images[i], p.images[rng.uniform_int(0, i)]);
        Mat pm = perm_matrix(p);
        Mat expect = matmul(pm, matmul(a, transpose(pm)));
        CHECK(max_abs(mat_sub(act_matrix(p, a), expect)) == 0.0);
    }
}

TEST_CASE("act_weightspace on the M=2 example") {
    // dims (1,2,1) is below the validated minimum; the same bookkeeping on
    // dims (2,2,2) with tau_1 = swap exercises every block.
    ArchSpec arch({2, 2, 2});
    WeightSpacePoint v = WeightSpacePoint::zeros(arch);
    v.weights[0] = Mat::from_rows({{1, 2}, {3, 4}});
    v.biases[0] = {5, 6};
    v.weights[1] = Mat::from_rows({{7, 8}, {9, 10}});
    v.biases[1] = {11, 12};

    MultiPermutation g;
    g.parts = {Permutation::transposition(2, 0, 1)};
    WeightSpacePoint out = act_weightspace(g, v);

    // W1 rows swapped, b1 swapped, W2 columns swapped, b2 fixed.
    CHECK(rel_err(out.weights[0], Mat::from_rows({{3, 4}, {1, 2}})) == 0.0);
    CHECK(out.biases[0] == Vec{6, 5});
    CHECK(rel_err(out.weights[1], Mat::from_rows({{8, 7}, {10, 9}})) == 0.0);
    CHECK(out.biases[1] == Vec{11, 12});
}

TEST_CASE("act_weightspace identity and composition") {
    ArchSpec arch({2, 3, 4, 2});
    Rng rng(23);
    WeightSpacePoint v = random_point(rng, arch);

    MultiPermutation id = MultiPermutation::identity(arch.hidden_dims());
    CHECK(rel_err(act_weightspace(id, v).flatten(), v.flatten()) == 0.0);

    for (int trial = 0; trial < 10; ++trial) {
        MultiPermutation g1 = random_multi(rng, arch.hidden_dims());
        MultiPermutation g2 = random_multi(rng, arch.hidden_dims());
        Vec lhs = act_weightspace(g2, act_weightspace(g1, v)).flatten();
        Vec rhs = act_weightspace(compose(g2, g1), v).flatten();
        CHECK(max_abs(vec_sub(lhs, rhs)) == 0.0);
    }
}

TEST_CASE("act_tuple basics and the hand-evaluated fixture") {
    ActionSpec base = ActionSpec::vector_perm(3);
    std::vector<Vec> t = {{1, 2, 3}, {4, 5, 6}};

    WreathElement id;
    id.outer = Permutation::identity(2);
    id.inner = {base_identity(base), base_identity(base)};
    CHECK(act_tuple(id, base, t) == t);

    WreathElement swap_only;
    swap_only.outer = Permutation::transposition(2, 0, 1);
    swap_only.inner = {base_identity(base), base_identity(base)};
    CHECK(act_tuple(swap_only, base, t) == std::vector<Vec>{{4, 5, 6}, {1, 2, 3}});

    // outer = swap, inner = (cycle 0->1->2->0, identity): slot 0 receives the
    // identity image of t[1], slot 1 the cycled t[0].
    WreathElement w;
    w.outer = Permutation::transposition(2, 0, 1);
    w.inner = {BaseElement(cycle012()), base_identity(base)};
    CHECK(act_tuple(w, base, t) == std::vector<Vec>{{4, 5, 6}, {3, 1, 2}});
}

TEST_CASE("wreath composition law") {
    ActionSpec base = ActionSpec::vector_perm(3);
    ActionSpec spec = ActionSpec::wreath_tuple(base, 3);
    Rng rng(5);

    auto random_wreath = [&]() {
        WreathElement w;
        w.outer = Permutation::identity(3);
        for (int i = 2; i > 0; --i)
            std::swap(w.outer.images[i], w.outer.images[rng.uniform_int(0, i)]);
        for (int s = 0; s < 3; ++s) {
            Permutation p = Permutation::identity(3);
            for (int i = 2; i > 0; --i)
                std::swap(p.images[i], p.images[rng.uniform_int(0, i)]);
            w.inner.push_back(p);
        }
        return w;
    };

    for (int trial = 0; trial < 20; ++trial) {
        WreathElement w1 = random_wreath(), w2 = random_wreath();
        std::vector<Vec> t = {rng.normal_vec(3), rng.normal_vec(3), rng.normal_vec(3)};
        std::vector<Vec> lhs = act_tuple(w2, base, act_tuple(w1, base, t));
        std::vector<Vec> rhs = act_tuple(compose(w2, w1), base, t);
        CHECK(max_abs(vec_sub(flatten_tuple(lhs), flatten_tuple(rhs))) == 0.0);

        // inverse undoes the action exactly
        std::vector<Vec> back = act_tuple(w1.inverse(), base, act_tuple(w1, base, t));
        CHECK(max_abs(vec_sub(flatten_tuple(back), flatten_tuple(t))) == 0.0);
    }

    // ambient permutation agrees with the typed action
    for (int trial = 0; trial < 10; ++trial) {
        WreathElement w = random_wreath();
        std::vector<Vec> t = {rng.normal_vec(3), rng.normal_vec(3), rng.normal_vec(3)};
        Vec via_ambient = act_vector(ambient_perm(spec, GroupElement(w)), flatten_tuple(t));
        CHECK(max_abs(vec_sub(via_ambient, flatten_tuple(act_tuple(w, base, t)))) == 0.0);
    }
}

TEST_CASE("generator counts") {
    CHECK(generators(ActionSpec::vector_perm(3)).size() == 2);
    CHECK(generators(ActionSpec::vector_perm(2)).size() == 1);
    CHECK(generators(ActionSpec::weight_space({2, 3, 4, 2})).size() == 4);
    CHECK(generators(ActionSpec::wreath_tuple(ActionSpec::vector_perm(3), 2)).size() == 3);
}

TEST_CASE("generators act with exact inverses on every spec") {
    std::vector<ActionSpec> specs = {
        ActionSpec::vector_perm(5),
        ActionSpec::matrix_conj(4),
        ActionSpec::weight_space({2, 3, 2}),
        ActionSpec::wreath_tuple(ActionSpec::matrix_conj(3), 2),
    };
    Rng rng(99);
    for (const ActionSpec& spec : specs) {
        Vec x = rng.normal_vec(spec.ambient_dim());
        for (const GroupElement& g : generators(spec)) {
            Vec moved = act_ambient(spec, g, x);
            Vec back = act_ambient(spec, element_inverse(g), moved);
            CHECK(max_abs(vec_sub(back, x)) == 0.0);
        }
    }
}

TEST_CASE("weight space ambient permutation matches the typed action") {
    ArchSpec arch({2, 3, 4, 2});
    ActionSpec spec = ActionSpec::weight_space(arch.dims);
    Rng rng(31);
    WeightSpacePoint v = random_point(rng, arch);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPermutation g = random_multi(rng, arch.hidden_dims());
        Vec via_perm = act_ambient(spec, GroupElement(g), v.flatten());
        CHECK(max_abs(vec_sub(via_perm, act_weightspace(g, v).flatten())) == 0.0);
    }
}

TEST_CASE("action spec validation") {
    CHECK_THROWS_AS(ActionSpec::vector_perm(1), InvalidInputError);
    CHECK_THROWS_AS(ActionSpec::weight_space({2, 1, 2}), InvalidInputError);
    CHECK_THROWS_AS(ActionSpec::weight_space({2, 3}), InvalidInputError);
    CHECK_THROWS_AS(ActionSpec::wreath_tuple(ActionSpec::vector_perm(3), 1), InvalidInputError);
    CHECK_THROWS_AS(
        ActionSpec::wreath_tuple(ActionSpec::wreath_tuple(ActionSpec::vector_perm(2), 2), 2),
        UnsupportedSpecError);
}

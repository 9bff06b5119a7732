#include <doctest.h>

#include <cmath>

#include "equilin/deepsets.hpp"
#include "equilin/graph.hpp"
#include "equilin/oracle.hpp"
#include "equilin/weight_space.hpp"
#include "equilin/wreath.hpp"

using namespace equilin;

TEST_CASE("fixed_basis fixtures") {
    {
        FixedBasis b = fixed_basis(ActionSpec::vector_perm(4));
        REQUIRE(b.size() == 1);
        CHECK(max_abs(vec_sub(b.vectors[0], Vec(4, 0.5))) < 1e-15);
    }
    {
        FixedBasis b = fixed_basis(ActionSpec::matrix_conj(4));
        REQUIRE(b.size() == 2);
        CHECK(rel_err(b.vectors[0], mat_scale(0.5, Mat::identity(4)).data) < 1e-14);
        Mat offdiag = mat_scale(1.0 / std::sqrt(12.0),
                                mat_sub(Mat::ones(4, 4), Mat::identity(4)));
        CHECK(rel_err(b.vectors[1], offdiag.data) < 1e-14);
    }
    {
        FixedBasis b = fixed_basis(ActionSpec::weight_space({2, 3, 4, 2}));
        CHECK(b.size() == dws_multiplicities(ArchSpec({2, 3, 4, 2})).alpha);
        CHECK(b.fixed_point_residual() == 0.0);
        CHECK(b.orthonormality_residual() < 1e-12);
    }
    CHECK_THROWS_AS(fixed_basis(ActionSpec::wreath_tuple(ActionSpec::vector_perm(3), 2)),
                    UnsupportedSpecError);
}

TEST_CASE("fixed bases are exactly fixed by all generators") {
    for (const ActionSpec& spec :
         {ActionSpec::vector_perm(5), ActionSpec::matrix_conj(3),
          ActionSpec::weight_space({2, 3, 2})}) {
        FixedBasis b = fixed_basis(spec);
        CHECK(b.fixed_point_residual() == 0.0);
        CHECK(b.orthonormality_residual() < 1e-12);
    }
}

TEST_CASE("wreath_layer fixtures") {
    ActionSpec base = ActionSpec::vector_perm(2);
    FixedBasis basis = fixed_basis(base);
    REQUIRE(basis.size() == 1);

    std::vector<Vec> t = {{1, 3}, {5, 7}};

    // a = 0, siamese = identity -> unchanged
    WreathCoefficients ident;
    ident.a = Mat(1, 1);
    ident.siamese = deepsets_iso_table(2).identity_coefficients();
    std::vector<Vec> same = wreath_layer(ident, basis, t);
    CHECK(rel_err(flatten_tuple(same), flatten_tuple(t)) < 1e-12);

    // a11 = 1, siamese = 0: every slot receives (sum_l <v_l, e1>) e1 = (8,8)
    WreathCoefficients sum_only;
    sum_only.a = Mat(1, 1);
    sum_only.a(0, 0) = 1.0;
    std::vector<Vec> out = wreath_layer(sum_only, basis, t);
    CHECK(rel_err(flatten_tuple(out), Vec{8, 8, 8, 8}) < 1e-12);

    std::vector<Vec> bad = {{1, 2, 3}, {4, 5, 6}};
    CHECK_THROWS_AS(wreath_layer(sum_only, basis, bad), DimensionError);
}

TEST_CASE("random wreath layers commute with all generators") {
    Rng rng(71);
    ActionSpec base = ActionSpec::matrix_conj(4);
    int k = 3;
    ActionSpec spec = ActionSpec::wreath_tuple(base, k);
    FixedBasis basis = fixed_basis(base);

    WreathCoefficients wc;
    wc.a = Mat(basis.size(), basis.size());
    for (double& x : wc.a.data) x = rng.normal();
    wc.siamese = random_coefficients(graph_iso_table(4), rng);

    std::vector<Vec> t;
    for (int s = 0; s < k; ++s) t.push_back(rng.normal_vec(16));
    Vec image = flatten_tuple(wreath_layer(wc, basis, t));

    for (const GroupElement& g : generators(spec)) {
        const WreathElement& w = std::get<WreathElement>(g);
        Vec lhs = flatten_tuple(wreath_layer(wc, basis, act_tuple(w, base, t)));
        Vec rhs = act_vector(ambient_perm(spec, g), image);
        CHECK(rel_err(lhs, rhs, 1e-12) < 1e-9);
    }
}

TEST_CASE("nonsiamese_count") {
    CHECK(nonsiamese_count(1, 2) == 1);
    CHECK(nonsiamese_count(2, 2) == 4);
    CHECK(nonsiamese_count(9, 2) == 81);
    CHECK(nonsiamese_count(1, 4) == 3);
    CHECK(nonsiamese_count(0, 5) == 0);
    CHECK_THROWS_AS(nonsiamese_count(-1, 2), InvalidInputError);
    CHECK_THROWS_AS(nonsiamese_count(2, 0), InvalidInputError);
}

TEST_CASE("subgroup_h with the oracle and the orbit cross-check") {
    std::vector<Permutation> s4 = {Permutation::transposition(4, 0, 1),
                                   Permutation::forward_cycle(4)};
    std::vector<Permutation> c4 = {Permutation::forward_cycle(4)};
    std::vector<Permutation> d4 = {Permutation::forward_cycle(4), Permutation({3, 2, 1, 0})};

    CHECK(subgroup_h(s4, 4) == 2);
    CHECK(subgroup_h(c4, 4) == 4);
    CHECK(subgroup_h(d4, 4) == 3);

    CHECK(pair_orbit_count(s4, 4) == 2);
    CHECK(pair_orbit_count(c4, 4) == 4);
    CHECK(pair_orbit_count(d4, 4) == 3);

    // a fixed point makes the action intransitive
    std::vector<Permutation> fix0 = {Permutation({0, 2, 3, 1})};
    CHECK_THROWS_AS(subgroup_h(fix0, 4), TransitivityError);
}

TEST_CASE("h_orbit_maps give the identity-completed commutant basis") {
    std::vector<Permutation> c4 = {Permutation::forward_cycle(4)};
    std::vector<Mat> maps = h_orbit_maps(c4, 4);
    CHECK(maps.size() == 3);  // h - 1 non-identity orbits
    std::vector<Mat> all = h_orbit_maps(c4, 4, true);
    CHECK(all.size() == 4);
    Mat sum(4, 4);
    for (const Mat& m : all) sum = mat_add(sum, m);
    CHECK(rel_err(sum, Mat::ones(4, 4)) == 0.0);  // orbits partition the pairs
}

TEST_CASE("beyond-S_k layers with orbit maps are equivariant") {
    Rng rng(73);
    ActionSpec base = ActionSpec::vector_perm(3);
    int k = 4;
    std::vector<Permutation> c4 = {Permutation::forward_cycle(4)};
    ActionSpec spec = ActionSpec::wreath_tuple(base, k, c4);
    FixedBasis basis = fixed_basis(base);

    WreathCoefficients wc;
    wc.a = Mat(1, 1);  // unused block stays zero
    wc.siamese = random_coefficients(deepsets_iso_table(3), rng);
    for (const Mat& t : h_orbit_maps(c4, k)) {
        wc.h_maps.push_back(t);
        Mat c(1, 1);
        c(0, 0) = rng.normal();
        wc.h_coeffs.push_back(c);
    }

    std::vector<Vec> t;
    for (int s = 0; s < k; ++s) t.push_back(rng.normal_vec(3));
    Vec image = flatten_tuple(wreath_layer(wc, basis, t));
    for (const GroupElement& g : generators(spec)) {
        const WreathElement& w = std::get<WreathElement>(g);
        Vec lhs = flatten_tuple(wreath_layer(wc, basis, act_tuple(w, base, t)));
        Vec rhs = act_vector(ambient_perm(spec, g), image);
        CHECK(rel_err(lhs, rhs, 1e-12) < 1e-9);
    }

    // stacked Siamese + (h-1) s^2 orbit layers exhaust the H-commutant
    std::vector<Vec> rows;
    for (const SchurCoefficients& coeffs : deepsets_iso_table(3).unit_coefficient_basis())
        rows.push_back(siamese_layer_matrix(base, coeffs, k).data);
    for (const Mat& t_map : h_orbit_maps(c4, k)) {
        WreathCoefficients unit;
        unit.a = Mat(1, 1);
        unit.h_maps.push_back(t_map);
        Mat c(1, 1);
        c(0, 0) = 1.0;
        unit.h_coeffs.push_back(c);
        rows.push_back(wreath_layer_matrix(unit, basis, k).data);
    }
    CHECK(rank_of(rows) == equivariant_basis(spec).dim);
}

TEST_CASE("siamese plus sum layers span the full tuple commutant for k = 2, 3") {
    ActionSpec base = ActionSpec::vector_perm(3);
    FixedBasis basis = fixed_basis(base);
    for (int k : {2, 3}) {
        std::vector<Vec> rows;
        for (const SchurCoefficients& coeffs : deepsets_iso_table(3).unit_coefficient_basis())
            rows.push_back(siamese_layer_matrix(base, coeffs, k).data);
        WreathCoefficients sum_layer;
        sum_layer.a = Mat(1, 1);
        sum_layer.a(0, 0) = 1.0;
        rows.push_back(wreath_layer_matrix(sum_layer, basis, k).data);
        CHECK(rank_of(rows) == 3);
        CHECK(equivariant_basis(ActionSpec::wreath_tuple(base, k)).dim == 3);
    }
}

TEST_CASE("span of the non-Siamese layers is basis independent") {
    ActionSpec base = ActionSpec::matrix_conj(4);
    int k = 2;
    FixedBasis e = fixed_basis(base);
    REQUIRE(e.size() == 2);

    // rotate the two fixed directions by an arbitrary angle
    FixedBasis f = e;
    double th = 0.7;
    f.vectors[0] = vec_add(vec_scale(std::cos(th), e.vectors[0]),
                           vec_scale(std::sin(th), e.vectors[1]));
    f.vectors[1] = vec_add(vec_scale(-std::sin(th), e.vectors[0]),
                           vec_scale(std::cos(th), e.vectors[1]));
    CHECK(f.fixed_point_residual() == 0.0);
    CHECK(f.orthonormality_residual() < 1e-12);

    auto sum_layers = [&](const FixedBasis& basis) {
        std::vector<Vec> rows;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                WreathCoefficients wc;
                wc.a = Mat(2, 2);
                wc.a(i, j) = 1.0;
                rows.push_back(wreath_layer_matrix(wc, basis, k).data);
            }
        return rows;
    };

    std::vector<Vec> rows_e = sum_layers(e), rows_f = sum_layers(f);
    CHECK(rank_of(rows_e) == 4);
    CHECK(rank_of(rows_f) == 4);
    std::vector<Vec> joint = rows_e;
    joint.insert(joint.end(), rows_f.begin(), rows_f.end());
    CHECK(rank_of(joint) == 4);
}

TEST_CASE("siamese counts per base space") {
    CHECK(siamese_count(ActionSpec::vector_perm(3)) == 2);
    CHECK(siamese_count(ActionSpec::matrix_conj(4)) == 15);
    CHECK(siamese_count(ActionSpec::weight_space({2, 2, 2})) == 74);
}

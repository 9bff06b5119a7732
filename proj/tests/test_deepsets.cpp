#include <doctest.h>

#include "equilin/deepsets.hpp"
#include "equilin/oracle.hpp"

using namespace equilin;

TEST_CASE("decompose_vector fixtures") {
    DeepSetsDecomposition d = decompose_vector(Vec{1, 2, 3});
    CHECK(d.mean == doctest::Approx(2.0));
    CHECK(d.mean_part() == Vec{2, 2, 2});
    CHECK(max_abs(vec_sub(d.residual, Vec{-1, 0, 1})) < 1e-15);

    DeepSetsDecomposition c = decompose_vector(Vec{4.5, 4.5, 4.5, 4.5});
    CHECK(max_abs(c.residual) == 0.0);
    CHECK(c.mean == doctest::Approx(4.5));

    DeepSetsDecomposition z = decompose_vector(Vec{2, -1, -1});
    CHECK(std::abs(z.mean) < 1e-15);
    CHECK(max_abs(vec_sub(z.residual, Vec{2, -1, -1})) < 1e-15);

    CHECK_THROWS_AS(decompose_vector(Vec{1}), DimensionError);
}

TEST_CASE("decompose then sum is the identity across sizes") {
    Rng rng(12);
    for (int n = 2; n <= 64; ++n) {
        Vec x = rng.normal_vec(n);
        DeepSetsDecomposition d = decompose_vector(x);
        CHECK(rel_err(d.reconstruct(), x) < 1e-12);
        CHECK(std::abs(vec_sum(d.residual)) <= 1e-12 * n * std::max(max_abs(x), 1.0));
    }
}

TEST_CASE("deepsets_layer closed form") {
    Rng rng(4);
    Vec x = rng.normal_vec(7);
    CHECK(rel_err(deepsets_layer(1, 1, x), x) < 1e-14);
    CHECK(max_abs(vec_sub(deepsets_layer(1, 0, Vec{1, 2, 3}), Vec{2, 2, 2})) < 1e-15);
    CHECK_THROWS_AS(deepsets_layer(1, 1, Vec{1}), DimensionError);
}

TEST_CASE("deepsets layer equals the assembled layer") {
    Rng rng(8);
    int n = 5;
    Vec x = rng.normal_vec(n);
    double a = rng.normal(), b = rng.normal();
    SchurCoefficients coeffs;
    coeffs.set(trivial_label(), 0, 0, a);
    coeffs.set(vec_label(0, n), 0, 0, b);
    Vec assembled = assemble_layer(coeffs, deepsets_decomposition(x), deepsets_iso_table(n));
    CHECK(rel_err(assembled, deepsets_layer(a, b, x)) < 1e-12);
}

TEST_CASE("deepsets layer is equivariant") {
    ActionSpec spec = ActionSpec::vector_perm(6);
    auto layer = [](const Vec& x) { return deepsets_layer(2.0, -1.0, x); };
    EquivarianceReport r = check_equivariance(layer, spec, 100, 1e-12, 7);
    CHECK(r.pass);
}

TEST_CASE("the two deepsets basis layers span the commutant") {
    int n = 5;
    ActionSpec spec = ActionSpec::vector_perm(n);
    std::vector<Vec> rows;
    for (auto [a, b] : {std::pair<double, double>{1, 0}, {0, 1}}) {
        Mat m(n, n);
        Vec e(n, 0.0);
        for (int j = 0; j < n; ++j) {
            e[j] = 1.0;
            Vec col = deepsets_layer(a, b, e);
            for (int i = 0; i < n; ++i) m(i, j) = col[i];
            e[j] = 0.0;
        }
        rows.push_back(m.data);
    }
    CHECK(rank_of(rows) == 2);
    CHECK(equivariant_basis(spec).dim == 2);
}

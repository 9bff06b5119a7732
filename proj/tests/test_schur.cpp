#include <doctest.h>

#include "equilin/deepsets.hpp"
#include "equilin/graph.hpp"
#include "equilin/schur.hpp"

using namespace equilin;

TEST_CASE("label identity semantics") {
    CHECK(vec_label(1, 4) == vec_label(1, 4));
    CHECK(vec_label(1, 4) != vec_label(2, 4));
    CHECK(trivial_label() != vec_label(0, 2));
    CHECK(mat_label(2, 4, 3) == mat_label(2, 4, 3));
    CHECK(tuple_lift_label(vec_label(1, 4)) == tuple_lift_label(vec_label(1, 4)));
    CHECK(tuple_lift_label(vec_label(1, 4)) != tuple_lift_label(vec_label(1, 5)));
    CHECK(tuple_trivial_sym_label() != tuple_trivial_zero_sum_label());
    CHECK_THROWS_AS(tuple_lift_label(tuple_trivial_sym_label()), InvalidInputError);
    CHECK(vec_label(1, 4).to_string() == "vec(1,4)");
}

TEST_CASE("param_count") {
    CHECK(param_count({2, 3, 1, 1}) == 15);
    CHECK(param_count({1}) == 1);
    CHECK(param_count({9, 4, 4, 1}) == 114);
    CHECK_THROWS_AS(param_count({}), InvalidInputError);
    CHECK_THROWS_AS(param_count({2, 0}), InvalidInputError);
}

TEST_CASE("assemble_layer identity and zero coefficients") {
    Rng rng(5);
    int n = 6;
    Vec x = rng.normal_vec(n);
    IsoMapTable table = deepsets_iso_table(n);
    Decomposition d = deepsets_decomposition(x);

    CHECK(rel_err(assemble_layer(table.identity_coefficients(), d, table), x) < 1e-12);

    SchurCoefficients zero;
    CHECK(max_abs(assemble_layer(zero, d, table)) == 0.0);
}

TEST_CASE("assemble_layer rejects unknown slots") {
    Rng rng(6);
    int n = 4;
    Vec x = rng.normal_vec(n * n);
    Mat a(n, n);
    a.data = x;
    IsoMapTable table = graph_iso_table(n);
    Decomposition d = graph_decomposition(a);

    SchurCoefficients bad;
    bad.set(vec_label(0, n), 0, 3, 1.0);  // only slots 0..2 exist
    CHECK_THROWS_AS(assemble_layer(bad, d, table), LayoutError);

    SchurCoefficients wrong_class;
    wrong_class.set(mat_label(2, n, n), 0, 0, 1.0);
    CHECK_THROWS_AS(assemble_layer(wrong_class, d, table), LayoutError);
}

TEST_CASE("assemble_layer is linear in input and coefficients") {
    Rng rng(7);
    int n = 5;
    IsoMapTable table = graph_iso_table(n);
    SchurCoefficients coeffs = random_coefficients(table, rng);

    Mat a(n, n), b(n, n);
    for (double& v : a.data) v = rng.normal();
    for (double& v : b.data) v = rng.normal();

    Vec lhs = assemble_layer(coeffs, graph_decomposition(mat_add(a, b)), table);
    Vec rhs = vec_add(assemble_layer(coeffs, graph_decomposition(a), table),
                      assemble_layer(coeffs, graph_decomposition(b), table));
    CHECK(rel_err(lhs, rhs) < 1e-10);

    // doubling all coefficients doubles the output
    SchurCoefficients doubled = coeffs;
    for (auto& [k, v] : doubled.entries) v *= 2.0;
    Vec once = assemble_layer(coeffs, graph_decomposition(a), table);
    Vec twice = assemble_layer(doubled, graph_decomposition(a), table);
    CHECK(rel_err(twice, vec_scale(2.0, once)) < 1e-12);
}

TEST_CASE("single coefficient routes a component to a single slot") {
    Rng rng(9);
    int n = 5;
    IsoMapTable table = graph_iso_table(n);
    Mat a(n, n);
    for (double& v : a.data) v = rng.normal();

    // route the diagonal class (slot 0) to the row class (slot 1)
    SchurCoefficients route;
    route.set(vec_label(0, n), 0, 1, 1.0);
    Vec out = assemble_layer(route, graph_decomposition(a), table);

    Mat out_m(n, n);
    out_m.data = out;
    Decomposition d = graph_decomposition(out_m);
    double scale = std::max(max_abs(out), 1e-12);
    for (const IrrepComponent& c : d.components) {
        bool is_target = c.label == vec_label(0, n) && c.slot == 1;
        if (!is_target) CHECK(max_abs(c.data) / scale < 1e-12);
    }
}

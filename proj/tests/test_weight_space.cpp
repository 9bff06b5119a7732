#include <doctest.h>

#include <cmath>

#include "equilin/layers.hpp"
#include "equilin/oracle.hpp"
#include "equilin/weight_space.hpp"

using namespace equilin;

namespace {

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
    for (Permutation& p : g.parts)
        for (int i = p.size() - 1; i > 0; --i)
            std::swap(p.images[i], p.images[rng.uniform_int(0, i)]);
    return g;
}

}  // namespace

TEST_CASE("multiplicities by enumeration") {
    {
        DwsMultiplicities m = dws_multiplicities(ArchSpec({2, 3, 4, 2}));
        CHECK(m.alpha == 9);
        CHECK(m.beta == std::vector<int>{4, 4});
        CHECK(m.mat_classes.size() == 1);
        CHECK(m.layer_param_count() == 114);
    }
    {
        // M = 2: the closed forms for beta_1 and beta_{M-1} collide; the
        // enumeration gives d0 + dM + 1.
        DwsMultiplicities m = dws_multiplicities(ArchSpec({2, 3, 2}));
        CHECK(m.alpha == 7);
        CHECK(m.beta == std::vector<int>{5});
        CHECK(m.mat_classes.empty());
        CHECK(m.layer_param_count() == 74);
    }
    {
        DwsMultiplicities m = dws_multiplicities(ArchSpec({3, 4, 4, 4, 3}));
        CHECK(m.alpha == 14);
        CHECK(m.beta == std::vector<int>{5, 3, 5});
        CHECK(m.mat_classes.size() == 2);
        CHECK(m.layer_param_count() == 257);
    }
    CHECK_THROWS_AS(dws_multiplicities(ArchSpec({2, 1, 2})), InvalidInputError);
}

TEST_CASE("dimension bookkeeping for dims (2,3,4,2)") {
    ArchSpec arch({2, 3, 4, 2});
    // 1*9 + 2*4 + 3*4 + 6*1 = 35 = total parameter count
    long total = 0;
    for (const auto& [label, mult] : dws_iso_table(arch).multiplicities()) {
        long dim = 1;
        if (label.tag == LabelTag::Vec) dim = label.args[1] - 1;
        if (label.tag == LabelTag::Mat)
            dim = static_cast<long>(label.args[1] - 1) * (label.args[2] - 1);
        total += dim * mult;
    }
    CHECK(total == 35);
    CHECK(arch.flat_dim() == 35);
}

TEST_CASE("decompose_weightspace fixtures") {
    ArchSpec arch({2, 3, 4, 2});
    {
        // Per-block constant tensors lie entirely in the trivial slots.
        WeightSpacePoint v = WeightSpacePoint::zeros(arch);
        for (size_t m = 0; m < v.weights.size(); ++m) {
            std::fill(v.weights[m].data.begin(), v.weights[m].data.end(), 1.5 + m);
            std::fill(v.biases[m].begin(), v.biases[m].end(), -0.5 * (m + 1));
        }
        Decomposition d = decompose_weightspace(v);
        for (const IrrepComponent& c : d.components)
            if (!(c.label == trivial_label())) CHECK(max_abs(c.data) < 1e-14);
        CHECK(rel_err(d.sum(), v.flatten()) < 1e-14);
    }
    {
        Decomposition d = decompose_weightspace(WeightSpacePoint::zeros(arch));
        for (const IrrepComponent& c : d.components) CHECK(max_abs(c.data) == 0.0);
    }
}

TEST_CASE("round trip and constraints for random points") {
    Rng rng(51);
    for (const std::vector<int>& dims :
         {std::vector<int>{2, 3, 2}, {2, 2, 2}, {2, 3, 4, 2}, {4, 5, 5, 4}}) {
        ArchSpec arch(dims);
        WeightSpacePoint v = random_point(rng, arch);
        Decomposition d = decompose_weightspace(v);
        CHECK(rel_err(d.sum(), v.flatten()) < 1e-10);
        double scale = std::max(max_abs(v.flatten()), 1e-12);
        CHECK(decomposition_constraint_residual(d, dws_iso_table(arch)) / scale < 1e-10);

        // component count: alpha + sum beta + #mat classes
        DwsMultiplicities m = dws_multiplicities(arch);
        size_t expected = m.alpha + m.mat_classes.size();
        for (int b : m.beta) expected += b;
        CHECK(d.components.size() == expected);
    }
}

TEST_CASE("decomposition commutes with the group action") {
    Rng rng(53);
    ArchSpec arch({2, 3, 4, 2});
    ActionSpec spec = ActionSpec::weight_space(arch.dims);
    WeightSpacePoint v = random_point(rng, arch);
    for (int trial = 0; trial < 5; ++trial) {
        MultiPermutation g = random_multi(rng, arch.hidden_dims());
        Permutation pi = ambient_perm(spec, GroupElement(g));
        Decomposition before = decompose_weightspace(v);
        Decomposition after = decompose_weightspace(act_weightspace(g, v));
        REQUIRE(before.components.size() == after.components.size());
        for (size_t i = 0; i < before.components.size(); ++i) {
            CHECK(before.components[i].label == after.components[i].label);
            CHECK(before.components[i].slot == after.components[i].slot);
            CHECK(rel_err(after.components[i].data,
                          act_vector(pi, before.components[i].data), 1e-12) < 1e-10);
        }
    }
}

TEST_CASE("dws_layer identity and single-channel routing") {
    Rng rng(57);
    ArchSpec arch({2, 3, 4, 2});
    WeightSpacePoint v = random_point(rng, arch);
    IsoMapTable table = dws_iso_table(arch);

    WeightSpacePoint same = dws_layer(table.identity_coefficients(), v);
    CHECK(rel_err(same.flatten(), v.flatten()) < 1e-12);

    // slot order: the b_1 mean is trivial slot d0, the b_2 mean is trivial
    // slot d0 + 2 (after W2's own mean); route b_1 -> b_2 and check the image
    // is a constant b_2 block only.
    int from = arch.dims[0];
    int to = arch.dims[0] + 2;
    SchurCoefficients route;
    route.set(trivial_label(), from, to, 1.0);
    WeightSpacePoint out = dws_layer(route, v);
    double b1_mean = vec_sum(v.biases[0]) / arch.dims[1];
    for (const Mat& w : out.weights) CHECK(max_abs(w) < 1e-14);
    CHECK(max_abs(out.biases[2]) < 1e-14);
    CHECK(max_abs(out.biases[0]) < 1e-14);
    // scalar copy between unit-norm constants: value = mean * sqrt(d1/d2)
    double expect = b1_mean * std::sqrt(static_cast<double>(arch.dims[1]) / arch.dims[2]);
    for (double x : out.biases[1]) CHECK(x == doctest::Approx(expect).epsilon(1e-12));

    SchurCoefficients bad;
    bad.set(trivial_label(), 0, 1000, 1.0);
    CHECK_THROWS_AS(dws_layer(bad, v), LayoutError);
}

TEST_CASE("random dws_layer is equivariant") {
    Rng rng(61);
    ArchSpec arch({2, 3, 4, 2});
    ActionSpec spec = ActionSpec::weight_space(arch.dims);
    SchurCoefficients coeffs = random_coefficients(dws_iso_table(arch), rng);
    CHECK(static_cast<long>(coeffs.size()) == 114);

    WeightSpacePoint v = random_point(rng, arch);
    WeightSpacePoint image = dws_layer(coeffs, v);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPermutation g = random_multi(rng, arch.hidden_dims());
        WeightSpacePoint lhs = dws_layer(coeffs, act_weightspace(g, v));
        WeightSpacePoint rhs = act_weightspace(g, image);
        CHECK(rel_err(lhs.flatten(), rhs.flatten(), 1e-12) < 1e-9);
    }
}

TEST_CASE("unit coefficient layers span the weight-space commutant") {
    ArchSpec arch({2, 2, 2});
    ActionSpec spec = ActionSpec::weight_space(arch.dims);
    std::vector<Vec> rows;
    for (const SchurCoefficients& coeffs : dws_iso_table(arch).unit_coefficient_basis())
        rows.push_back(layer_matrix(spec, coeffs).data);
    CHECK(static_cast<long>(rows.size()) == 74);
    CHECK(rank_of(rows) == 74);
    CHECK(equivariant_basis(spec).dim == 74);
}

TEST_CASE("dws_param_count matches the oracle on small architectures") {
    for (const std::vector<int>& dims : {std::vector<int>{2, 2, 2}, {2, 3, 2}, {2, 3, 4, 2}}) {
        ActionSpec spec = ActionSpec::weight_space(dims);
        CHECK(equivariant_basis(spec).dim == dws_param_count(ArchSpec(dims)));
    }
}

TEST_CASE("invariant map count equals alpha") {
    for (const std::vector<int>& dims : {std::vector<int>{2, 2, 2}, {2, 3, 2}, {2, 3, 4, 2}}) {
        ActionSpec spec = ActionSpec::weight_space(dims);
        CHECK(invariant_basis(spec).dim == dws_multiplicities(ArchSpec(dims)).alpha);
    }
}

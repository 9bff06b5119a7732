#include "equilin/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <sstream>

#include "equilin/deepsets.hpp"
#include "equilin/graph.hpp"
#include "equilin/layers.hpp"
#include "equilin/oracle.hpp"
#include "equilin/weight_space.hpp"
#include "equilin/wreath.hpp"

namespace equilin {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Check {
    bool pass = true;
    std::ostringstream details;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details << "FAIL: " << what << "; ";
        }
    }
    void note(const std::string& what) { details << what << "; "; }
};

Mat random_mat(Rng& rng, int n) {
    Mat a(n, n);
    for (double& x : a.data) x = rng.normal();
    return a;
}

WeightSpacePoint random_point(Rng& rng, const ArchSpec& arch) {
    WeightSpacePoint v = WeightSpacePoint::zeros(arch);
    for (Mat& w : v.weights)
        for (double& x : w.data) x = rng.normal();
    for (Vec& b : v.biases)
        for (double& x : b) x = rng.normal();
    return v;
}

// Criterion 1: oracle dimensions match the closed forms, under 5 s each.
CriterionResult commutant_dims() {
    Check c;
    double worst_time = 0.0;
    auto timed_dim = [&](const ActionSpec& spec) {
        auto start = std::chrono::steady_clock::now();
        int dim = equivariant_basis(spec).dim;
        worst_time = std::max(worst_time, seconds_since(start));
        return dim;
    };

    for (int n = 2; n <= 8; ++n)
        c.expect(timed_dim(ActionSpec::vector_perm(n)) == 2,
                 "S_n on R^n dim != 2 at n=" + std::to_string(n));
    for (int n = 2; n <= 6; ++n)
        c.expect(timed_dim(ActionSpec::matrix_conj(n)) == ign_basis_dim(n),
                 "conjugation dim mismatch at n=" + std::to_string(n));

    const std::vector<std::pair<std::vector<int>, long>> archs = {
        {{2, 3, 2}, 74}, {{2, 3, 4, 2}, 114}, {{3, 4, 4, 4, 3}, 257}};
    for (const auto& [dims, expected] : archs) {
        ActionSpec spec = ActionSpec::weight_space(dims);
        long closed = dws_param_count(ArchSpec(dims));
        c.expect(closed == expected, "closed-form weight-space count mismatch");
        c.expect(timed_dim(spec) == closed, "oracle != closed form for weight space");
        auto start = std::chrono::steady_clock::now();
        int inv = invariant_basis(spec).dim;
        worst_time = std::max(worst_time, seconds_since(start));
        c.expect(inv == dws_multiplicities(ArchSpec(dims)).alpha,
                 "invariant-map count != alpha");
    }
    c.expect(worst_time < 5.0, "an oracle run exceeded 5 s");
    c.note("slowest oracle " + std::to_string(worst_time) + " s");
    return {"1", "commutant dimensions vs closed forms", c.pass, c.details.str()};
}

// Criterion 2: wreath totals = Siamese count + s^2.
CriterionResult wreath_totals() {
    Check c;
    auto total = [&](const ActionSpec& base, int k) {
        long siamese = siamese_count(base);
        long s = fixed_basis(base).size();
        ActionSpec spec = ActionSpec::wreath_tuple(base, k);
        int oracle = equivariant_basis(spec).dim;
        return std::make_tuple(siamese + s * s, static_cast<long>(oracle));
    };

    auto [exp1, got1] = total(ActionSpec::vector_perm(3), 2);
    c.expect(exp1 == 3 && got1 == 3, "deepsets n=3 k=2 total != 3");
    auto [exp2, got2] = total(ActionSpec::vector_perm(3), 3);
    c.expect(exp2 == 3 && got2 == 3, "deepsets n=3 k=3 total != 3");
    auto [exp3, got3] = total(ActionSpec::matrix_conj(4), 2);
    c.expect(exp3 == 19 && got3 == 19, "graphs n=4 k=2 total != 19");

    ActionSpec ws = ActionSpec::weight_space({2, 2, 2});
    long alpha = dws_multiplicities(ArchSpec({2, 2, 2})).alpha;
    c.expect(alpha == 7, "alpha mismatch for dims (2,2,2)");
    auto [exp4, got4] = total(ws, 2);
    c.expect(exp4 == siamese_count(ws) + alpha * alpha && exp4 == got4,
             "weight space (2,2,2) k=2 total mismatch");
    c.note("totals " + std::to_string(got1) + "/" + std::to_string(got2) + "/" +
           std::to_string(got3) + "/" + std::to_string(got4));
    return {"2", "wreath commutant totals", c.pass, c.details.str()};
}

// Criterion 3: subgroup counts h and the C4 wreath total.
CriterionResult beyond_sk() {
    Check c;
    std::vector<Permutation> s4 = {Permutation::transposition(4, 0, 1),
                                   Permutation::forward_cycle(4)};
    std::vector<Permutation> c4 = {Permutation::forward_cycle(4)};
    std::vector<Permutation> d4 = {Permutation::forward_cycle(4),
                                   Permutation({3, 2, 1, 0})};
    c.expect(subgroup_h(s4, 4) == 2, "h(S4) != 2");
    c.expect(subgroup_h(c4, 4) == 4, "h(C4) != 4");
    c.expect(subgroup_h(d4, 4) == 3, "h(D4) != 3");

    ActionSpec spec = ActionSpec::wreath_tuple(ActionSpec::vector_perm(3), 4, c4);
    int dim = equivariant_basis(spec).dim;
    c.expect(dim == 2 + nonsiamese_count(1, 4), "deepsets base with H=C4: total != 5");
    c.note("C4 wreath dim " + std::to_string(dim));
    return {"3", "transitive subgroups beyond S_k", c.pass, c.details.str()};
}

// Criterion 4: 200 decomposition round trips per kind within 1e-10 relative.
CriterionResult round_trips() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    Rng rng(kDefaultSeed);
    double worst = 0.0;

    for (int t = 0; t < 200; ++t) {
        int n = 3 + t % 6;
        Mat a = random_mat(rng, n);
        Decomposition d = graph_decomposition(a);
        double scale = std::max(max_abs(a), 1e-12);
        worst = std::max(worst, rel_err(d.sum(), a.data));
        worst = std::max(worst,
                         decomposition_constraint_residual(d, graph_iso_table(n)) / scale);
    }

    const std::vector<std::vector<int>> archs = {
        {2, 3, 2}, {2, 2, 2}, {2, 3, 4, 2}, {3, 4, 4, 4, 3}, {4, 5, 5, 4}};
    for (int t = 0; t < 200; ++t) {
        ArchSpec arch(archs[t % archs.size()]);
        WeightSpacePoint v = random_point(rng, arch);
        Decomposition d = decompose_weightspace(v);
        double scale = std::max(max_abs(v.flatten()), 1e-12);
        worst = std::max(worst, rel_err(d.sum(), v.flatten()));
        worst = std::max(worst,
                         decomposition_constraint_residual(d, dws_iso_table(arch)) / scale);
    }

    double elapsed = seconds_since(start);
    c.expect(worst <= 1e-10, "round-trip or constraint residual above 1e-10");
    c.expect(elapsed < 10.0, "round-trip suite exceeded 10 s");
    c.note("worst residual " + std::to_string(worst) + ", " + std::to_string(elapsed) + " s");
    return {"4", "decomposition round trips", c.pass, c.details.str()};
}

// Criterion 5: randomized equivariance at 1e-9 plus a failing broken layer.
CriterionResult equivariance_suite() {
    Check c;
    const int trials = 1000;
    const double tol = 1e-9;
    Rng rng(kDefaultSeed);

    {
        ActionSpec spec = ActionSpec::vector_perm(6);
        SchurCoefficients coeffs = random_coefficients(deepsets_iso_table(6), rng);
        auto layer = [&](const Vec& x) { return apply_layer(spec, coeffs, x); };
        EquivarianceReport r = check_equivariance(layer, spec, trials, tol, kDefaultSeed);
        c.expect(r.pass, "deepsets layer violated equivariance");
    }
    {
        ActionSpec spec = ActionSpec::matrix_conj(5);
        SchurCoefficients coeffs = random_coefficients(graph_iso_table(5), rng);
        auto layer = [&](const Vec& x) { return apply_layer(spec, coeffs, x); };
        EquivarianceReport r = check_equivariance(layer, spec, trials, tol, kDefaultSeed + 1);
        c.expect(r.pass, "graph layer violated equivariance");
    }
    {
        ActionSpec spec = ActionSpec::weight_space({2, 3, 4, 2});
        SchurCoefficients coeffs = random_coefficients(dws_iso_table(spec.arch), rng);
        auto layer = [&](const Vec& x) { return apply_layer(spec, coeffs, x); };
        EquivarianceReport r = check_equivariance(layer, spec, trials, tol, kDefaultSeed + 2);
        c.expect(r.pass, "weight-space layer violated equivariance");
    }
    {
        ActionSpec base = ActionSpec::matrix_conj(4);
        int k = 3;
        ActionSpec spec = ActionSpec::wreath_tuple(base, k);
        FixedBasis basis = fixed_basis(base);
        WreathCoefficients wc;
        wc.a = random_mat(rng, basis.size());
        wc.siamese = random_coefficients(graph_iso_table(4), rng);
        auto layer = [&](const Vec& x) {
            return flatten_tuple(wreath_layer(wc, basis, unflatten_tuple(k, 16, x)));
        };
        EquivarianceReport r = check_equivariance(layer, spec, trials, tol, kDefaultSeed + 3);
        c.expect(r.pass, "wreath layer violated equivariance");
    }
    {
        ActionSpec spec = ActionSpec::vector_perm(3);
        auto broken = [](const Vec& x) {
            Vec y = x;
            y[0] += 1.0;
            return y;
        };
        EquivarianceReport r = check_equivariance(broken, spec, 100, tol, kDefaultSeed + 4);
        c.expect(!r.pass && r.max_relative_violation > 1e-2,
                 "broken layer fixture was not rejected");
        c.note("broken-layer violation " + std::to_string(r.max_relative_violation));
    }
    return {"5", "randomized equivariance suite", c.pass, c.details.str()};
}

// Criterion 6: Siamese basis + s^2 sum layers span the full commutant.
CriterionResult span_completeness() {
    Check c;
    auto span_rank = [&](const ActionSpec& base, int k) {
        FixedBasis basis = fixed_basis(base);
        int s = basis.size();
        std::vector<Vec> stacked;
        for (const SchurCoefficients& coeffs : iso_table_for(base).unit_coefficient_basis())
            stacked.push_back(siamese_layer_matrix(base, coeffs, k).data);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                WreathCoefficients wc;
                wc.a = Mat(s, s);
                wc.a(i, j) = 1.0;
                stacked.push_back(wreath_layer_matrix(wc, basis, k).data);
            }
        int oracle = equivariant_basis(ActionSpec::wreath_tuple(base, k)).dim;
        return std::make_pair(rank_of(stacked), oracle);
    };

    auto [rank1, dim1] = span_rank(ActionSpec::vector_perm(3), 2);
    c.expect(rank1 == dim1, "deepsets tuple span rank != oracle dim");
    auto [rank2, dim2] = span_rank(ActionSpec::matrix_conj(4), 2);
    c.expect(rank2 == dim2, "graph tuple span rank != oracle dim");
    c.note("ranks " + std::to_string(rank1) + "=" + std::to_string(dim1) + ", " +
           std::to_string(rank2) + "=" + std::to_string(dim2));
    return {"6", "tuple layer span completeness", c.pass, c.details.str()};
}

// Criterion 7: projector ranks of the two large graph classes and weight-space
// dimension bookkeeping.
CriterionResult dimension_audits() {
    Check c;
    Rng rng(kDefaultSeed);
    for (int n = 4; n <= 7; ++n) {
        std::vector<Vec> v5s, v6s;
        for (int t = 0; t < n * n; ++t) {
            GraphDecomposition g = decompose_matrix(random_mat(rng, n));
            v5s.push_back(g.parts[5].data);
            v6s.push_back(g.parts[6].data);
        }
        int want5 = (n * n - 3 * n) / 2 + 1;
        int want6 = (n * n - 3 * n) / 2;
        c.expect(rank_of(v5s) == want5, "dim V5 mismatch at n=" + std::to_string(n));
        c.expect(rank_of(v6s) == want6, "dim V6 mismatch at n=" + std::to_string(n));
    }

    const std::vector<std::vector<int>> archs = {{2, 3, 2}, {2, 3, 4, 2}, {3, 4, 4, 4, 3}};
    for (const auto& dims : archs) {
        ArchSpec arch(dims);
        long total = 0;
        for (const auto& [label, mult] : dws_iso_table(arch).multiplicities()) {
            long d = 1;
            if (label.tag == LabelTag::Vec) d = label.args[1] - 1;
            if (label.tag == LabelTag::Mat)
                d = static_cast<long>(label.args[1] - 1) * (label.args[2] - 1);
            total += d * mult;
        }
        c.expect(total == arch.flat_dim(), "irreducible dimension bookkeeping mismatch");
    }
    return {"7", "dimension audits", c.pass, c.details.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    return {commutant_dims(), wreath_totals(), beyond_sk(),      round_trips(),
            equivariance_suite(), span_completeness(), dimension_audits()};
}

}  // namespace equilin

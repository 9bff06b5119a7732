#include "equilin/oracle.hpp"

#include <cmath>

namespace equilin {

AmbientRep ambient_rep(const ActionSpec& spec) {
    spec.validate();
    AmbientRep rep;
    rep.dim = spec.ambient_dim();
    for (const GroupElement& g : generators(spec)) rep.gens.push_back(ambient_perm(spec, g));
    return rep;
}

AmbientRep trivial_rep(int generator_count, int dim) {
    AmbientRep rep;
    rep.dim = dim;
    rep.gens.assign(generator_count, Permutation::identity(dim));
    return rep;
}

EquivariantBasis equivariant_basis(const AmbientRep& in, const AmbientRep& out, long budget) {
    if (in.gens.empty()) throw InvalidInputError("equivariant_basis: empty generator list");
    if (in.gens.size() != out.gens.size())
        throw InvalidInputError("equivariant_basis: generator lists must be aligned");
    long unknowns = static_cast<long>(in.dim) * out.dim;
    if (unknowns > budget)
        throw BudgetError("equivariant_basis: " + std::to_string(unknowns) +
                          " unknowns exceed budget " + std::to_string(budget));

    // Unknowns are the entries of L (row-major, L_{ab} at a*D_in + b). Each
    // generator contributes L_{a,pi(b)} - L_{sigma^{-1}(a),b} = 0.
    RowReducer rr(static_cast<int>(unknowns), 1e-9);
    for (size_t g = 0; g < in.gens.size(); ++g) {
        const Permutation& pi = in.gens[g];
        if (pi.size() != in.dim) throw DimensionError("equivariant_basis: generator size mismatch");
        Permutation sigma_inv = out.gens[g].inverse();
        if (sigma_inv.size() != out.dim)
            throw DimensionError("equivariant_basis: output generator size mismatch");
        for (int a = 0; a < out.dim; ++a)
            for (int b = 0; b < in.dim; ++b) {
                int u = a * in.dim + pi(b);
                int v = sigma_inv(a) * in.dim + b;
                if (u == v) continue;
                rr.insert_sparse({{u, 1.0}, {v, -1.0}});
            }
    }

    EquivariantBasis result;
    for (Vec& x : rr.null_space()) {
        Mat L(out.dim, in.dim);
        L.data = std::move(x);
        result.basis.push_back(std::move(L));
    }
    result.dim = static_cast<int>(result.basis.size());
    return result;
}

EquivariantBasis equivariant_basis(const ActionSpec& spec, long budget) {
    AmbientRep rep = ambient_rep(spec);
    return equivariant_basis(rep, rep, budget);
}

EquivariantBasis invariant_basis(const ActionSpec& spec, long budget) {
    AmbientRep rep = ambient_rep(spec);
    return equivariant_basis(rep, trivial_rep(static_cast<int>(rep.gens.size())), budget);
}

EquivarianceReport check_equivariance(const std::function<Vec(const Vec&)>& layer,
                                      const ActionSpec& spec, int trials, double tol,
                                      uint64_t seed) {
    if (trials < 1) throw InvalidInputError("check_equivariance: need at least one trial");
    AmbientRep rep = ambient_rep(spec);
    Rng rng(seed);

    EquivarianceReport report;
    report.trials = trials;
    report.seed = seed;
    report.tol = tol;

    for (int t = 0; t < trials; ++t) {
        Vec x = rng.normal_vec(rep.dim);
        int word_len = rng.uniform_int(1, 4);
        Permutation word = Permutation::identity(rep.dim);
        for (int w = 0; w < word_len; ++w) {
            int pick = rng.uniform_int(0, static_cast<int>(rep.gens.size()) - 1);
            word = compose(rep.gens[pick], word);
        }
        Vec lx = layer(x);
        if (static_cast<int>(lx.size()) != rep.dim)
            throw DimensionError("check_equivariance: layer output dimension mismatch");
        Vec lgx = layer(act_vector(word, x));
        Vec glx = act_vector(word, lx);
        double viol = max_abs(vec_sub(lgx, glx)) / std::max(max_abs(lx), 1e-12);
        report.max_relative_violation = std::max(report.max_relative_violation, viol);
    }
    report.pass = report.max_relative_violation <= tol;
    return report;
}

long pair_orbit_count(const std::vector<Permutation>& gens, int n) {
    if (gens.empty()) throw InvalidInputError("pair_orbit_count: empty generator list");
    for (const Permutation& g : gens)
        if (g.size() != n) throw DimensionError("pair_orbit_count: generator size mismatch");
    std::vector<int> orbit(static_cast<size_t>(n) * n, -1);
    long count = 0;
    std::vector<int> stack;
    for (int start = 0; start < n * n; ++start) {
        if (orbit[start] >= 0) continue;
        orbit[start] = static_cast<int>(count);
        stack.push_back(start);
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            int a = cur / n, b = cur % n;
            for (const Permutation& g : gens) {
                int nxt = g(a) * n + g(b);
                if (orbit[nxt] < 0) {
                    orbit[nxt] = static_cast<int>(count);
                    stack.push_back(nxt);
                }
            }
        }
        ++count;
    }
    return count;
}

}  // namespace equilin

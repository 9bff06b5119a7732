#include "equilin/wreath.hpp"

#include <cmath>

#include "equilin/oracle.hpp"

namespace equilin {

double FixedBasis::fixed_point_residual() const {
    double worst = 0.0;
    for (const GroupElement& g : generators(base_space)) {
        Permutation pi = ambient_perm(base_space, g);
        for (const Vec& e : vectors)
            worst = std::max(worst, max_abs(vec_sub(act_vector(pi, e), e)));
    }
    return worst;
}

double FixedBasis::orthonormality_residual() const {
    double worst = 0.0;
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            double want = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::fabs(dot(vectors[i], vectors[j]) - want));
        }
    return worst;
}

FixedBasis fixed_basis(const ActionSpec& spec) {
    spec.validate();
    if (spec.kind == ActionSpec::Kind::WreathTuple)
        throw UnsupportedSpecError("fixed_basis: base space must not itself be a tuple");

    FixedBasis out;
    out.base_space = spec;

    // One vector per trivial slot of the canonical table, already unit-norm
    // with disjoint supports; a sequential orthonormalization pass keeps the
    // result well-defined if that ever changes.
    IsoMapTable table = iso_table_for(spec);
    for (const SlotMap& s : table.slots) {
        if (!(s.label == trivial_label())) continue;
        Vec e = s.embed(Vec{1.0});
        for (const Vec& prev : out.vectors) vec_axpy(-dot(prev, e), prev, e);
        double norm = std::sqrt(dot(e, e));
        if (norm < 1e-12)
            throw InvalidInputError("fixed_basis: degenerate trivial slot");
        out.vectors.push_back(vec_scale(1.0 / norm, e));
    }
    return out;
}

std::vector<Vec> wreath_layer(const WreathCoefficients& coeffs, const FixedBasis& basis,
                              const std::vector<Vec>& tuple) {
    int k = static_cast<int>(tuple.size());
    if (k < 2) throw DimensionError("wreath_layer: need k >= 2 tuple entries");
    int dim = basis.base_space.ambient_dim();
    for (const Vec& v : tuple)
        if (static_cast<int>(v.size()) != dim)
            throw DimensionError("wreath_layer: tuple entry dimension mismatch");
    int s = basis.size();
    if (coeffs.a.rows != s || coeffs.a.cols != s)
        throw DimensionError("wreath_layer: coefficient block must be s x s");
    if (coeffs.h_maps.size() != coeffs.h_coeffs.size())
        throw DimensionError("wreath_layer: h_maps and h_coeffs must align");

    std::vector<Vec> out(k);
    for (int q = 0; q < k; ++q)
        out[q] = coeffs.siamese.size() == 0
                     ? Vec(dim, 0.0)
                     : apply_layer(basis.base_space, coeffs.siamese, tuple[q]);

    // Cross-slot sums through the fixed subspace.
    for (int i = 0; i < s; ++i) {
        double total = 0.0;
        for (const Vec& v : tuple) total += dot(v, basis.vectors[i]);
        for (int j = 0; j < s; ++j) {
            double c = coeffs.a(i, j) * total;
            if (c == 0.0) continue;
            for (int q = 0; q < k; ++q) vec_axpy(c, basis.vectors[j], out[q]);
        }
    }

    // Extra blocks for transitive subgroups H < S_k.
    for (size_t blk = 0; blk < coeffs.h_maps.size(); ++blk) {
        const Mat& t = coeffs.h_maps[blk];
        const Mat& c = coeffs.h_coeffs[blk];
        if (t.rows != k || t.cols != k)
            throw DimensionError("wreath_layer: h_map must be k x k");
        if (c.rows != s || c.cols != s)
            throw DimensionError("wreath_layer: h_coeff block must be s x s");
        for (int i = 0; i < s; ++i) {
            Vec x(k);
            for (int q = 0; q < k; ++q) x[q] = dot(tuple[q], basis.vectors[i]);
            Vec y = mat_vec(t, x);
            for (int j = 0; j < s; ++j)
                for (int q = 0; q < k; ++q)
                    if (c(i, j) != 0.0) vec_axpy(c(i, j) * y[q], basis.vectors[j], out[q]);
        }
    }
    return out;
}

Mat wreath_layer_matrix(const WreathCoefficients& coeffs, const FixedBasis& basis, int k) {
    int dim = basis.base_space.ambient_dim();
    int total = k * dim;
    Mat m(total, total);
    Vec e(total, 0.0);
    for (int col = 0; col < total; ++col) {
        e[col] = 1.0;
        Vec image = flatten_tuple(wreath_layer(coeffs, basis, unflatten_tuple(k, dim, e)));
        for (int row = 0; row < total; ++row) m(row, col) = image[row];
        e[col] = 0.0;
    }
    return m;
}

Mat siamese_layer_matrix(const ActionSpec& base, const SchurCoefficients& coeffs, int k) {
    Mat block = layer_matrix(base, coeffs);
    int dim = block.rows;
    Mat m(k * dim, k * dim);
    for (int q = 0; q < k; ++q)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m(q * dim + i, q * dim + j) = block(i, j);
    return m;
}

long nonsiamese_count(long s, long h) {
    if (s < 0) throw InvalidInputError("nonsiamese_count: s must be >= 0");
    if (h < 1) throw InvalidInputError("nonsiamese_count: h must be >= 1");
    return (h - 1) * s * s;
}

bool is_transitive(const std::vector<Permutation>& gens, int k) {
    if (gens.empty()) throw InvalidInputError("is_transitive: empty generator list");
    for (const Permutation& g : gens)
        if (g.size() != k) throw DimensionError("is_transitive: generator size mismatch");
    std::vector<char> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const Permutation& g : gens) {
            if (!seen[g(cur)]) {
                seen[g(cur)] = 1;
                ++reached;
                stack.push_back(g(cur));
            }
        }
    }
    return reached == k;
}

int subgroup_h(const std::vector<Permutation>& h_gens, int k) {
    if (!is_transitive(h_gens, k))
        throw TransitivityError("subgroup_h: generators do not act transitively on the slots");
    AmbientRep rep;
    rep.dim = k;
    rep.gens = h_gens;
    return equivariant_basis(rep, rep).dim;
}

std::vector<Mat> h_orbit_maps(const std::vector<Permutation>& h_gens, int k,
                              bool include_identity) {
    if (!is_transitive(h_gens, k))
        throw TransitivityError("h_orbit_maps: generators do not act transitively on the slots");
    std::vector<int> orbit(static_cast<size_t>(k) * k, -1);
    int count = 0;
    std::vector<int> stack;
    for (int start = 0; start < k * k; ++start) {
        if (orbit[start] >= 0) continue;
        orbit[start] = count;
        stack.push_back(start);
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            int a = cur / k, b = cur % k;
            for (const Permutation& g : h_gens) {
                int nxt = g(a) * k + g(b);
                if (orbit[nxt] < 0) {
                    orbit[nxt] = count;
                    stack.push_back(nxt);
                }
            }
        }
        ++count;
    }

    // Transitivity makes the diagonal a single orbit: its indicator is the
    // identity map, the Siamese direction.
    int diag_orbit = orbit[0];
    std::vector<Mat> maps;
    for (int o = 0; o < count; ++o) {
        if (o == diag_orbit && !include_identity) continue;
        Mat m(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (orbit[a * k + b] == o) m(a, b) = 1.0;
        maps.push_back(std::move(m));
    }
    return maps;
}

long siamese_count(const ActionSpec& base) { return closed_form_dim(base); }

}  // namespace equilin

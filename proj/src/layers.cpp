#include "equilin/layers.hpp"

#include "equilin/deepsets.hpp"
#include "equilin/graph.hpp"
#include "equilin/weight_space.hpp"

namespace equilin {

IsoMapTable iso_table_for(const ActionSpec& spec) {
    switch (spec.kind) {
        case ActionSpec::Kind::VectorPerm: return deepsets_iso_table(spec.n);
        case ActionSpec::Kind::MatrixConj: return graph_iso_table(spec.n);
        case ActionSpec::Kind::WeightSpace: return dws_iso_table(spec.arch);
        default:
            throw UnsupportedSpecError("iso_table_for: no canonical table for tuple specs");
    }
}

Decomposition decompose_for(const ActionSpec& spec, const Vec& flat) {
    if (static_cast<int>(flat.size()) != spec.ambient_dim())
        throw DimensionError("decompose_for: flat vector length mismatch");
    switch (spec.kind) {
        case ActionSpec::Kind::VectorPerm: return deepsets_decomposition(flat);
        case ActionSpec::Kind::MatrixConj: {
            Mat a(spec.n, spec.n);
            a.data = flat;
            return graph_decomposition(a);
        }
        case ActionSpec::Kind::WeightSpace:
            return decompose_weightspace(WeightSpacePoint::unflatten(spec.arch, flat));
        default:
            throw UnsupportedSpecError("decompose_for: tuple specs are not decomposed here");
    }
}

Vec apply_layer(const ActionSpec& spec, const SchurCoefficients& coeffs, const Vec& flat) {
    return assemble_layer(coeffs, decompose_for(spec, flat), iso_table_for(spec));
}

Mat layer_matrix(const ActionSpec& spec, const SchurCoefficients& coeffs) {
    int dim = spec.ambient_dim();
    Mat m(dim, dim);
    Vec e(dim, 0.0);
    for (int j = 0; j < dim; ++j) {
        e[j] = 1.0;
        Vec col = apply_layer(spec, coeffs, e);
        for (int i = 0; i < dim; ++i) m(i, j) = col[i];
        e[j] = 0.0;
    }
    return m;
}

long closed_form_dim(const ActionSpec& spec) {
    switch (spec.kind) {
        case ActionSpec::Kind::VectorPerm: return 2;
        case ActionSpec::Kind::MatrixConj: return ign_basis_dim(spec.n);
        case ActionSpec::Kind::WeightSpace: return dws_param_count(spec.arch);
        default:
            throw UnsupportedSpecError("closed_form_dim: unsupported spec kind");
    }
}

}  // namespace equilin

#include "equilin/deepsets.hpp"

#include <cmath>

namespace equilin {

Vec DeepSetsDecomposition::reconstruct() const {
    Vec x(residual);
    for (double& v : x) v += mean;
    return x;
}

DeepSetsDecomposition decompose_vector(const Vec& x) {
    int n = static_cast<int>(x.size());
    if (n < 2) throw DimensionError("decompose_vector: need n >= 2");
    DeepSetsDecomposition d;
    d.n = n;
    d.mean = vec_sum(x) / n;
    d.residual = x;
    for (double& v : d.residual) v -= d.mean;
    return d;
}

Vec deepsets_layer(double a, double b, const Vec& x) {
    DeepSetsDecomposition d = decompose_vector(x);
    Vec y(d.n);
    for (int i = 0; i < d.n; ++i) y[i] = a * d.mean + b * d.residual[i];
    return y;
}

IsoMapTable deepsets_iso_table(int n) {
    if (n < 2) throw DimensionError("deepsets_iso_table: need n >= 2");
    IsoMapTable table;
    table.ambient_dim = n;
    double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));

    SlotMap triv;
    triv.label = trivial_label();
    triv.slot = 0;
    triv.extract = [n, inv_sqrt_n](const Vec& z) { return Vec{vec_sum(z) * inv_sqrt_n}; };
    triv.embed = [n, inv_sqrt_n](const Vec& c) { return Vec(n, c.at(0) * inv_sqrt_n); };
    table.slots.push_back(std::move(triv));

    SlotMap res;
    res.label = vec_label(0, n);
    res.slot = 0;
    res.extract = [](const Vec& z) { return z; };
    res.embed = [](const Vec& c) { return c; };
    table.slots.push_back(std::move(res));

    return table;
}

Decomposition deepsets_decomposition(const Vec& x) {
    DeepSetsDecomposition d = decompose_vector(x);
    Decomposition out;
    out.ambient = ActionSpec::vector_perm(d.n);
    out.components.push_back({trivial_label(), 0, d.mean_part()});
    out.components.push_back({vec_label(0, d.n), 0, d.residual});
    return out;
}

}  // namespace equilin

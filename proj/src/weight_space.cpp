#include "equilin/weight_space.hpp"

#include <cmath>

namespace equilin {

namespace {

struct BlockOffsets {
    std::vector<int> w_off;  // w_off[m-1]: start of W_m in the flat layout
    std::vector<int> b_off;  // b_off[m-1]: start of b_m
    int total = 0;
};

BlockOffsets block_offsets(const ArchSpec& arch) {
    BlockOffsets off;
    int cur = 0;
    for (int m = 1; m <= arch.depth(); ++m) {
        off.w_off.push_back(cur);
        cur += arch.dims[m] * arch.dims[m - 1];
        off.b_off.push_back(cur);
        cur += arch.dims[m];
    }
    off.total = cur;
    return off;
}

}  // namespace

long DwsMultiplicities::layer_param_count() const {
    std::vector<int> mults;
    mults.push_back(alpha);
    mults.insert(mults.end(), beta.begin(), beta.end());
    long total = param_count(mults);
    return total + static_cast<long>(mat_classes.size());
}

IsoMapTable dws_iso_table(const ArchSpec& arch) {
    ArchSpec checked(arch.dims);  // validate
    const int M = checked.depth();
    const std::vector<int>& d = checked.dims;
    BlockOffsets off = block_offsets(checked);

    IsoMapTable table;
    table.ambient_dim = off.total;
    std::map<IsoClassLabel, int> next_slot;

    auto add = [&](const IsoClassLabel& label, std::function<Vec(const Vec&)> extract,
                   std::function<Vec(const Vec&)> embed) {
        SlotMap s;
        s.label = label;
        s.slot = next_slot[label]++;
        s.extract = std::move(extract);
        s.embed = std::move(embed);
        table.slots.push_back(std::move(s));
    };

    int D = off.total;

    // Trivial at a set of coordinates carrying the constant pattern 1/sqrt(count).
    auto add_trivial = [&](std::vector<int> idx) {
        double norm = std::sqrt(static_cast<double>(idx.size()));
        add(
            trivial_label(),
            [idx, norm](const Vec& z) {
                double s = 0.0;
                for (int i : idx) s += z[i];
                return Vec{s / norm};
            },
            [idx, norm, D](const Vec& c) {
                Vec z(D, 0.0);
                for (int i : idx) z[i] = c.at(0) / norm;
                return z;
            });
    };

    // Vec(m) as raw zero-sum coordinates copied verbatim to a list of slots
    // (a bias block, a matrix column or row).
    auto add_vec_at = [&](int m, std::vector<int> idx) {
        add(
            vec_label(m, static_cast<int>(idx.size())),
            [idx](const Vec& z) {
                Vec v(idx.size());
                for (size_t i = 0; i < idx.size(); ++i) v[i] = z[idx[i]];
                return v;
            },
            [idx, D](const Vec& c) {
                Vec z(D, 0.0);
                for (size_t i = 0; i < idx.size(); ++i) z[idx[i]] = c.at(i);
                return z;
            });
    };

    auto col_indices = [&](int m, int j) {  // column j of W_m
        std::vector<int> idx(d[m]);
        for (int i = 0; i < d[m]; ++i) idx[i] = off.w_off[m - 1] + i * d[m - 1] + j;
        return idx;
    };
    auto row_indices = [&](int m, int i) {  // row i of W_m
        std::vector<int> idx(d[m - 1]);
        for (int j = 0; j < d[m - 1]; ++j) idx[j] = off.w_off[m - 1] + i * d[m - 1] + j;
        return idx;
    };
    auto block_indices = [&](int m) {  // all of W_m
        std::vector<int> idx(d[m] * d[m - 1]);
        for (int q = 0; q < d[m] * d[m - 1]; ++q) idx[q] = off.w_off[m - 1] + q;
        return idx;
    };
    auto bias_indices = [&](int m) {
        std::vector<int> idx(d[m]);
        for (int i = 0; i < d[m]; ++i) idx[i] = off.b_off[m - 1] + i;
        return idx;
    };

    // m = 1: columns of W_1 are independent vectors permuted by tau_1.
    for (int j = 0; j < d[0]; ++j) add_trivial(col_indices(1, j));
    for (int j = 0; j < d[0]; ++j) add_vec_at(1, col_indices(1, j));
    add_trivial(bias_indices(1));
    add_vec_at(1, bias_indices(1));

    // 2 <= m <= M-1: mean / column part / row part / doubly zero-sum part.
    for (int m = 2; m <= M - 1; ++m) {
        int rows = d[m], cols = d[m - 1];
        int w0 = off.w_off[m - 1];
        add_trivial(block_indices(m));

        // 1 c^T: canonical coords c in R^{cols}, permuted by tau_{m-1}
        add(
            vec_label(m - 1, cols),
            [w0, rows, cols](const Vec& z) {
                Vec c(cols, 0.0);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j) c[j] += z[w0 + i * cols + j];
                for (double& v : c) v /= rows;
                return c;
            },
            [w0, rows, cols, D](const Vec& c) {
                Vec z(D, 0.0);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j) z[w0 + i * cols + j] = c.at(j);
                return z;
            });

        // r 1^T: canonical coords r in R^{rows}, permuted by tau_m
        add(
            vec_label(m, rows),
            [w0, rows, cols](const Vec& z) {
                Vec r(rows, 0.0);
                for (int i = 0; i < rows; ++i) {
                    for (int j = 0; j < cols; ++j) r[i] += z[w0 + i * cols + j];
                    r[i] /= cols;
                }
                return r;
            },
            [w0, rows, cols, D](const Vec& r) {
                Vec z(D, 0.0);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j) z[w0 + i * cols + j] = r.at(i);
                return z;
            });

        // Doubly zero-sum part: canonical coords are the block entries themselves.
        {
            std::vector<int> idx = block_indices(m);
            add(
                mat_label(m, rows, cols),
                [idx](const Vec& z) {
                    Vec v(idx.size());
                    for (size_t q = 0; q < idx.size(); ++q) v[q] = z[idx[q]];
                    return v;
                },
                [idx, D](const Vec& c) {
                    Vec z(D, 0.0);
                    for (size_t q = 0; q < idx.size(); ++q) z[idx[q]] = c.at(q);
                    return z;
                });
        }

        add_trivial(bias_indices(m));
        add_vec_at(m, bias_indices(m));
    }

    // m = M: rows of W_M are independent vectors permuted by tau_{M-1};
    // b_M is fixed pointwise.
    for (int i = 0; i < d[M]; ++i) add_trivial(row_indices(M, i));
    for (int i = 0; i < d[M]; ++i) add_vec_at(M - 1, row_indices(M, i));
    for (int i = 0; i < d[M]; ++i) add_trivial({off.b_off[M - 1] + i});

    return table;
}

DwsMultiplicities dws_multiplicities(const ArchSpec& arch) {
    ArchSpec checked(arch.dims);
    const int M = checked.depth();
    IsoMapTable table = dws_iso_table(checked);

    DwsMultiplicities out;
    out.alpha = table.multiplicity(trivial_label());
    for (int m = 1; m <= M - 1; ++m)
        out.beta.push_back(table.multiplicity(vec_label(m, checked.dims[m])));
    for (int m = 2; m <= M - 1; ++m)
        out.mat_classes.push_back(mat_label(m, checked.dims[m], checked.dims[m - 1]));

    if (M >= 3) {
        // Closed forms hold for M >= 3; the enumeration is authoritative.
        const std::vector<int>& d = checked.dims;
        int alpha_cf = d[0] + 2 * d[M] + 2 * M - 3;
        if (out.alpha != alpha_cf)
            throw InvalidInputError("dws_multiplicities: alpha enumeration mismatch");
        for (int m = 1; m <= M - 1; ++m) {
            int expect = (m == 1) ? d[0] + 2 : (m == M - 1) ? d[M] + 2 : 3;
            if (out.beta[m - 1] != expect)
                throw InvalidInputError("dws_multiplicities: beta enumeration mismatch");
        }
    }
    return out;
}

Decomposition decompose_weightspace(const WeightSpacePoint& v) {
    v.validate();
    const ArchSpec& arch = v.arch;
    const int M = arch.depth();
    const std::vector<int>& d = arch.dims;
    BlockOffsets off = block_offsets(arch);
    Vec flat = v.flatten();
    int D = off.total;

    Decomposition out;
    out.ambient = ActionSpec::weight_space(arch.dims);

    auto push = [&](const IsoClassLabel& label, Vec data) {
        int slot = 0;
        for (const IrrepComponent& c : out.components)
            if (c.label == label) ++slot;
        out.components.push_back({label, slot, std::move(data)});
    };

    auto constant_at = [&](const std::vector<int>& idx, double value) {
        Vec z(D, 0.0);
        for (int i : idx) z[i] = value;
        return z;
    };

    // Mean + residual over an index set, pushed as Trivial + Vec(m).
    auto split_set = [&](int m, const std::vector<int>& idx) {
        double mean = 0.0;
        for (int i : idx) mean += flat[i];
        mean /= static_cast<double>(idx.size());
        push(trivial_label(), constant_at(idx, mean));
        Vec z(D, 0.0);
        for (int i : idx) z[i] = flat[i] - mean;
        push(vec_label(m, static_cast<int>(idx.size())), std::move(z));
    };

    auto col_indices = [&](int m, int j) {
        std::vector<int> idx(d[m]);
        for (int i = 0; i < d[m]; ++i) idx[i] = off.w_off[m - 1] + i * d[m - 1] + j;
        return idx;
    };
    auto row_indices = [&](int m, int i) {
        std::vector<int> idx(d[m - 1]);
        for (int j = 0; j < d[m - 1]; ++j) idx[j] = off.w_off[m - 1] + i * d[m - 1] + j;
        return idx;
    };
    auto bias_indices = [&](int m) {
        std::vector<int> idx(d[m]);
        for (int i = 0; i < d[m]; ++i) idx[i] = off.b_off[m - 1] + i;
        return idx;
    };

    // m = 1: split each column of W_1, then b_1. Components are pushed in the
    // same traversal order as the slots of dws_iso_table.
    {
        std::vector<std::pair<IsoClassLabel, Vec>> trivials, residuals;
        for (int j = 0; j < d[0]; ++j) {
            std::vector<int> idx = col_indices(1, j);
            double mean = 0.0;
            for (int i : idx) mean += flat[i];
            mean /= static_cast<double>(idx.size());
            trivials.emplace_back(trivial_label(), constant_at(idx, mean));
            Vec z(D, 0.0);
            for (int i : idx) z[i] = flat[i] - mean;
            residuals.emplace_back(vec_label(1, d[1]), std::move(z));
        }
        for (auto& [l, z] : trivials) push(l, std::move(z));
        for (auto& [l, z] : residuals) push(l, std::move(z));
        split_set(1, bias_indices(1));
    }

    // middle weights: global mean, column part, row part, doubly zero-sum part
    for (int m = 2; m <= M - 1; ++m) {
        int rows = d[m], cols = d[m - 1];
        int w0 = off.w_off[m - 1];
        const Mat& w = v.weights[m - 1];

        double mean = 0.0;
        for (double x : w.data) mean += x;
        mean /= static_cast<double>(rows * cols);

        Vec r(rows, 0.0), c(cols, 0.0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                double b = w(i, j) - mean;
                r[i] += b;
                c[j] += b;
            }
        for (double& x : r) x /= cols;
        for (double& x : c) x /= rows;

        Vec zmean(D, 0.0), zc(D, 0.0), zr(D, 0.0), zm(D, 0.0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                int q = w0 + i * cols + j;
                zmean[q] = mean;
                zc[q] = c[j];
                zr[q] = r[i];
                zm[q] = w(i, j) - mean - r[i] - c[j];
            }
        push(trivial_label(), std::move(zmean));
        push(vec_label(m - 1, cols), std::move(zc));
        push(vec_label(m, rows), std::move(zr));
        push(mat_label(m, rows, cols), std::move(zm));
        split_set(m, bias_indices(m));
    }

    // m = M: split each row of W_M; b_M entries are individually fixed.
    {
        std::vector<Vec> trivials, residuals;
        for (int i = 0; i < d[M]; ++i) {
            std::vector<int> idx = row_indices(M, i);
            double mean = 0.0;
            for (int q : idx) mean += flat[q];
            mean /= static_cast<double>(idx.size());
            trivials.push_back(constant_at(idx, mean));
            Vec z(D, 0.0);
            for (int q : idx) z[q] = flat[q] - mean;
            residuals.push_back(std::move(z));
        }
        for (Vec& z : trivials) push(trivial_label(), std::move(z));
        for (Vec& z : residuals) push(vec_label(M - 1, d[M - 1]), std::move(z));
        for (int i = 0; i < d[M]; ++i) {
            int q = off.b_off[M - 1] + i;
            push(trivial_label(), constant_at({q}, flat[q]));
        }
    }

    return out;
}

WeightSpacePoint dws_layer(const SchurCoefficients& coeffs, const WeightSpacePoint& v) {
    v.validate();
    Vec flat = assemble_layer(coeffs, decompose_weightspace(v), dws_iso_table(v.arch));
    return WeightSpacePoint::unflatten(v.arch, flat);
}

long dws_param_count(const ArchSpec& arch) {
    return dws_multiplicities(arch).layer_param_count();
}

}  // namespace equilin

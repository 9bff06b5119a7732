#include "equilin/graph.hpp"

#include <cmath>

namespace equilin {

namespace {

Mat outer_rows(const Vec& r, int cols) {  // r 1^T
    Mat m(static_cast<int>(r.size()), cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = r[i];
    return m;
}

Mat outer_cols(int rows, const Vec& c) {  // 1 c^T
    Mat m(rows, static_cast<int>(c.size()));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < m.cols; ++j) m(i, j) = c[j];
    return m;
}

Mat diag_of(const Vec& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows; ++i) m(i, i) = d[i];
    return m;
}

}  // namespace

Mat GraphDecomposition::reconstruct() const {
    Mat total(n, n);
    for (const Mat& p : parts) total = mat_add(total, p);
    return total;
}

GraphDecomposition decompose_matrix(const Mat& a) {
    if (a.rows != a.cols) throw DimensionError("decompose_matrix: matrix is not square");
    int n = a.rows;
    if (n < 3)
        throw DimensionError("decompose_matrix: need n >= 3 (use decompose_matrix_n2 for n = 2)");

    GraphDecomposition out;
    out.n = n;

    // Mean diagonal and off-diagonal parts: the two trivial components.
    double diag_mean = 0.0, off_mean = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            (i == j ? diag_mean : off_mean) += a(i, j);
    diag_mean /= n;
    off_mean /= static_cast<double>(n) * (n - 1);

    Mat b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = a(i, j) - (i == j ? diag_mean : off_mean);

    // Row sums, column sums and diagonal of B; all three sum to zero.
    Vec rb(n, 0.0), cb(n, 0.0), db(n, 0.0);
    for (int i = 0; i < n; ++i) {
        db[i] = b(i, i);
        for (int j = 0; j < n; ++j) {
            rb[i] += b(i, j);
            cb[j] += b(i, j);
        }
    }

    // Unique r, c, d (each zero-sum) with C = B + r1^T + 1c^T + diag(d) having
    // zero diagonal and zero row/column sums. Per index i < n-1:
    //   (n-1) r_i - c_i = d^B_i - r^B_i
    //   (n-1) c_i - r_i = d^B_i - c^B_i
    // inverted with the 1/(n^2-2n) prefactor; the last entries close the sums.
    double inv = 1.0 / (static_cast<double>(n) * n - 2.0 * n);
    Vec r(n, 0.0), c(n, 0.0), d(n, 0.0);
    for (int i = 0; i < n - 1; ++i) {
        double u = db[i] - rb[i];
        double v = db[i] - cb[i];
        r[i] = inv * ((n - 1) * u + v);
        c[i] = inv * (u + (n - 1) * v);
        d[i] = -db[i] - r[i] - c[i];
        r[n - 1] -= r[i];
        c[n - 1] -= c[i];
        d[n - 1] -= d[i];
    }

    Mat cmat = b;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cmat(i, j) += r[i] + c[j] + (i == j ? d[i] : 0.0);

    out.parts[0] = mat_scale(diag_mean, Mat::identity(n));
    out.parts[1] = mat_sub(Mat::ones(n, n), Mat::identity(n));
    out.parts[1] = mat_scale(off_mean, out.parts[1]);
    out.parts[2] = diag_of(vec_scale(-1.0, d));
    out.parts[3] = outer_rows(vec_scale(-1.0, r), n);
    out.parts[4] = outer_cols(n, vec_scale(-1.0, c));
    out.parts[5] = mat_scale(0.5, mat_sub(cmat, transpose(cmat)));
    if (n == 3) {
        // The symmetric zero-diagonal zero-sum space is zero-dimensional.
        out.parts[6] = Mat(n, n);
    } else {
        out.parts[6] = mat_scale(0.5, mat_add(cmat, transpose(cmat)));
    }
    return out;
}

std::array<Mat, 4> decompose_matrix_n2(const Mat& a) {
    if (a.rows != 2 || a.cols != 2) throw DimensionError("decompose_matrix_n2: need a 2x2 matrix");
    // Unique solution of A = b I + a (J - I) + diag(d, -d) + (r, -r) 1^T.
    double off = 0.5 * (a(0, 1) + a(1, 0));
    double r0 = 0.5 * (a(0, 1) - a(1, 0));
    double diag = 0.5 * (a(0, 0) + a(1, 1));
    double d0 = 0.5 * (a(0, 0) - a(1, 1)) - r0;

    std::array<Mat, 4> out;
    out[0] = mat_scale(diag, Mat::identity(2));
    out[1] = mat_scale(off, mat_sub(Mat::ones(2, 2), Mat::identity(2)));
    out[2] = diag_of(Vec{d0, -d0});
    out[3] = outer_rows(Vec{r0, -r0}, 2);
    return out;
}

int ign_basis_dim(int n) {
    if (n < 2) throw DimensionError("ign_basis_dim: need n >= 2");
    if (n == 2) return 8;
    if (n == 3) return 14;
    return 15;
}

IsoMapTable graph_iso_table(int n) {
    if (n < 2) throw DimensionError("graph_iso_table: need n >= 2");
    IsoMapTable table;
    table.ambient_dim = n * n;

    auto flat_diag = [n](const Vec& z) {
        Vec d(n);
        for (int i = 0; i < n; ++i) d[i] = z[static_cast<size_t>(i) * n + i];
        return d;
    };

    double norm0 = std::sqrt(static_cast<double>(n));
    double norm1 = std::sqrt(static_cast<double>(n) * n - n);

    SlotMap t0;  // b * I
    t0.label = trivial_label();
    t0.slot = 0;
    t0.extract = [flat_diag, norm0](const Vec& z) { return Vec{vec_sum(flat_diag(z)) / norm0}; };
    t0.embed = [n, norm0](const Vec& c) {
        Vec z(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) z[static_cast<size_t>(i) * n + i] = c.at(0) / norm0;
        return z;
    };
    table.slots.push_back(std::move(t0));

    SlotMap t1;  // a * (J - I)
    t1.label = trivial_label();
    t1.slot = 1;
    t1.extract = [n, norm1](const Vec& z) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += z[static_cast<size_t>(i) * n + j];
        return Vec{s / norm1};
    };
    t1.embed = [n, norm1](const Vec& c) {
        Vec z(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) z[static_cast<size_t>(i) * n + j] = c.at(0) / norm1;
        return z;
    };
    table.slots.push_back(std::move(t1));

    SlotMap v2;  // zero-trace diagonal; canonical coords = the diagonal vector
    v2.label = vec_label(0, n);
    v2.slot = 0;
    v2.extract = flat_diag;
    v2.embed = [n](const Vec& c) {
        Vec z(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) z[static_cast<size_t>(i) * n + i] = c.at(i);
        return z;
    };
    table.slots.push_back(std::move(v2));

    SlotMap v3;  // r 1^T; canonical coords = r
    v3.label = vec_label(0, n);
    v3.slot = 1;
    v3.extract = [n](const Vec& z) {
        Vec r(n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) r[i] += z[static_cast<size_t>(i) * n + j];
            r[i] /= n;
        }
        return r;
    };
    v3.embed = [n](const Vec& c) {
        Vec z(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) z[static_cast<size_t>(i) * n + j] = c.at(i);
        return z;
    };
    table.slots.push_back(std::move(v3));

    if (n >= 3) {
        SlotMap v4;  // 1 c^T; canonical coords = c
        v4.label = vec_label(0, n);
        v4.slot = 2;
        v4.extract = [n](const Vec& z) {
            Vec c(n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) c[j] += z[static_cast<size_t>(i) * n + j];
            for (double& v : c) v /= n;
            return c;
        };
        v4.embed = [n](const Vec& c) {
            Vec z(static_cast<size_t>(n) * n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) z[static_cast<size_t>(i) * n + j] = c.at(j);
            return z;
        };
        table.slots.push_back(std::move(v4));

        SlotMap v5;
        v5.label = graph_antisym_label(n);
        v5.slot = 0;
        v5.extract = [](const Vec& z) { return z; };
        v5.embed = [](const Vec& c) { return c; };
        table.slots.push_back(std::move(v5));
    }

    if (n >= 4) {
        SlotMap v6;
        v6.label = graph_sym_zero_diag_label(n);
        v6.slot = 0;
        v6.extract = [](const Vec& z) { return z; };
        v6.embed = [](const Vec& c) { return c; };
        table.slots.push_back(std::move(v6));
    }

    return table;
}

Decomposition graph_decomposition(const Mat& a) {
    if (a.rows != a.cols) throw DimensionError("graph_decomposition: matrix is not square");
    int n = a.rows;
    Decomposition out;
    out.ambient = ActionSpec::matrix_conj(n);
    if (n == 2) {
        std::array<Mat, 4> parts = decompose_matrix_n2(a);
        out.components.push_back({trivial_label(), 0, parts[0].data});
        out.components.push_back({trivial_label(), 1, parts[1].data});
        out.components.push_back({vec_label(0, 2), 0, parts[2].data});
        out.components.push_back({vec_label(0, 2), 1, parts[3].data});
        return out;
    }
    GraphDecomposition g = decompose_matrix(a);
    out.components.push_back({trivial_label(), 0, g.parts[0].data});
    out.components.push_back({trivial_label(), 1, g.parts[1].data});
    out.components.push_back({vec_label(0, n), 0, g.parts[2].data});
    out.components.push_back({vec_label(0, n), 1, g.parts[3].data});
    out.components.push_back({vec_label(0, n), 2, g.parts[4].data});
    out.components.push_back({graph_antisym_label(n), 0, g.parts[5].data});
    if (n >= 4) out.components.push_back({graph_sym_zero_diag_label(n), 0, g.parts[6].data});
    return out;
}

Mat ign_layer(const SchurCoefficients& coeffs, const Mat& a) {
    if (a.rows != a.cols) throw DimensionError("ign_layer: matrix is not square");
    int n = a.rows;
    Vec flat = assemble_layer(coeffs, graph_decomposition(a), graph_iso_table(n));
    Mat out(n, n);
    out.data = std::move(flat);
    return out;
}

}  // namespace equilin

#include "equilin/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace equilin {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::ones(int r, int c) {
    Mat m(r, c);
    std::fill(m.data.begin(), m.data.end(), 1.0);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rws) {
    if (rws.empty()) return Mat();
    Mat m(static_cast<int>(rws.size()), static_cast<int>(rws[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rws[i].size()) != m.cols)
            throw DimensionError("from_rows: ragged row lengths");
        for (int j = 0; j < m.cols; ++j) m(i, j) = rws[i][j];
    }
    return m;
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw DimensionError("matmul: inner dimensions differ");
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Mat transpose(const Mat& a) {
    Mat t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

Mat mat_add(const Mat& a, const Mat& b) {
    if (!a.same_shape(b)) throw DimensionError("mat_add: shape mismatch");
    Mat c = a;
    for (size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
    return c;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    if (!a.same_shape(b)) throw DimensionError("mat_sub: shape mismatch");
    Mat c = a;
    for (size_t i = 0; i < c.data.size(); ++i) c.data[i] -= b.data[i];
    return c;
}

Mat mat_scale(double s, const Mat& a) {
    Mat c = a;
    for (double& x : c.data) x *= s;
    return c;
}

Vec mat_vec(const Mat& a, const Vec& x) {
    if (static_cast<int>(x.size()) != a.cols) throw DimensionError("mat_vec: size mismatch");
    Vec y(a.rows, 0.0);
    for (int i = 0; i < a.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vec_add: size mismatch");
    Vec c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vec_sub: size mismatch");
    Vec c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

Vec vec_scale(double s, const Vec& a) {
    Vec c = a;
    for (double& x : c) x *= s;
    return c;
}

void vec_axpy(double s, const Vec& x, Vec& y) {
    if (x.size() != y.size()) throw DimensionError("vec_axpy: size mismatch");
    for (size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double max_abs(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

double max_abs(const Mat& a) { return max_abs(a.data); }

double vec_sum(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

double rel_err(const Vec& a, const Vec& b, double floor_abs) {
    if (a.size() != b.size()) throw DimensionError("rel_err: size mismatch");
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    double scale = std::max(std::max(max_abs(a), max_abs(b)), floor_abs);
    return d / scale;
}

double rel_err(const Mat& a, const Mat& b, double floor_abs) {
    if (!a.same_shape(b)) throw DimensionError("rel_err: shape mismatch");
    return rel_err(a.data, b.data, floor_abs);
}

RowReducer::RowReducer(int ncols, double pivot_tol)
    : ncols_(ncols), pivot_tol_(pivot_tol), pivot_of_col_(ncols, -1) {
    if (ncols <= 0) throw InvalidInputError("RowReducer: need at least one column");
}

bool RowReducer::insert_dense(const Vec& row) {
    if (static_cast<int>(row.size()) != ncols_) throw DimensionError("insert_dense: wrong length");
    std::vector<std::pair<int, double>> sp;
    for (int j = 0; j < ncols_; ++j)
        if (row[j] != 0.0) sp.emplace_back(j, row[j]);
    return insert_sparse(sp);
}

bool RowReducer::insert_sparse(const std::vector<std::pair<int, double>>& row) {
    // Working copy, sorted by column with duplicates merged.
    std::vector<std::pair<int, double>> work(row);
    std::sort(work.begin(), work.end());
    {
        size_t w = 0;
        for (size_t i = 0; i < work.size(); ++i) {
            if (w > 0 && work[w - 1].first == work[i].first)
                work[w - 1].second += work[i].second;
            else
                work[w++] = work[i];
        }
        work.resize(w);
    }
    double scale = 0.0;
    for (auto& [c, v] : work) {
        if (c < 0 || c >= ncols_) throw DimensionError("insert_sparse: column out of range");
        scale = std::max(scale, std::fabs(v));
    }
    if (scale == 0.0) return false;
    double drop = pivot_tol_ * scale;

    // Eliminate against existing pivot rows until no entry sits on a pivot
    // column (entries of any magnitude; stored rows may only reference pivots
    // created after them, which back-substitution relies on). Rows from
    // permutation constraints never grow beyond a couple of entries.
    for (;;) {
        int hit = -1;
        double hit_val = 0.0;
        for (auto& [c, v] : work) {
            if (pivot_of_col_[c] >= 0) { hit = c; hit_val = v; break; }
        }
        if (hit < 0) break;
        const EchelonRow& er = rows_[pivot_of_col_[hit]];
        std::vector<std::pair<int, double>> merged;
        merged.reserve(work.size() + er.entries.size());
        size_t i = 0, j = 0;
        while (i < work.size() || j < er.entries.size()) {
            if (j == er.entries.size() || (i < work.size() && work[i].first < er.entries[j].first)) {
                merged.push_back(work[i++]);
            } else if (i == work.size() || er.entries[j].first < work[i].first) {
                merged.emplace_back(er.entries[j].first, -hit_val * er.entries[j].second);
                ++j;
            } else {
                double v = work[i].second - hit_val * er.entries[j].second;
                if (std::fabs(v) > 0.0) merged.emplace_back(work[i].first, v);
                ++i;
                ++j;
            }
        }
        work.swap(merged);
    }

    // Partial pivoting: pivot on the largest surviving entry.
    int pc = -1;
    double pv = 0.0;
    for (auto& [c, v] : work)
        if (std::fabs(v) > std::fabs(pv)) { pv = v; pc = c; }
    if (pc < 0 || std::fabs(pv) <= drop) return false;  // dependent row

    EchelonRow er;
    er.pivot_col = pc;
    er.entries.reserve(work.size());
    for (auto& [c, v] : work) {
        double nv = v / pv;
        if (c != pc && std::fabs(nv) <= pivot_tol_ && pivot_of_col_[c] < 0) continue;
        er.entries.emplace_back(c, nv);
    }
    pivot_of_col_[pc] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(er));
    return true;
}

std::vector<Vec> RowReducer::null_space() const {
    std::vector<Vec> basis;
    for (int f = 0; f < ncols_; ++f) {
        if (pivot_of_col_[f] >= 0) continue;
        Vec x(ncols_, 0.0);
        x[f] = 1.0;
        // Rows were fully reduced against all earlier pivots at insertion, so
        // a row only references pivot columns created after it; solving in
        // reverse insertion order is a valid back-substitution.
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            double s = 0.0;
            for (auto& [c, v] : it->entries)
                if (c != it->pivot_col) s += v * x[c];
            x[it->pivot_col] = -s;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

int rank_of(const std::vector<Vec>& rows, double pivot_tol) {
    if (rows.empty()) return 0;
    RowReducer rr(static_cast<int>(rows[0].size()), pivot_tol);
    for (const Vec& r : rows) rr.insert_dense(r);
    return rr.rank();
}

uint64_t Rng::next_u64() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do { u1 = uniform(); } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo) throw InvalidInputError("uniform_int: empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

Vec Rng::normal_vec(int n) {
    Vec v(n);
    for (double& x : v) x = normal();
    return v;
}

}  // namespace equilin

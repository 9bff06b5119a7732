#pragma once

#include <cstdint>
#include <vector>

#include "equilin/errors.hpp"

namespace equilin {

using Vec = std::vector<double>;

// Dense row-major matrix. Small sizes only; no attempt at blocking or BLAS.
struct Mat {
    int rows = 0;
    int cols = 0;
    Vec data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

    static Mat identity(int n);
    static Mat ones(int r, int c);
    static Mat from_rows(const std::vector<Vec>& rws);
};

Mat matmul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(double s, const Mat& a);
Vec mat_vec(const Mat& a, const Vec& x);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(double s, const Vec& a);
void vec_axpy(double s, const Vec& x, Vec& y);  // y += s*x
double dot(const Vec& a, const Vec& b);
double max_abs(const Vec& v);
double max_abs(const Mat& a);
double vec_sum(const Vec& v);

// |a-b|_inf / max(scale, floor); scale defaults to max(|a|,|b|).
double rel_err(const Vec& a, const Vec& b, double floor_abs = 1e-12);
double rel_err(const Mat& a, const Mat& b, double floor_abs = 1e-12);

// Row reduction with partial pivoting over rows kept in compressed form
// (sorted column/value pairs). The pivot of each inserted row is its
// largest-magnitude entry after reduction; rows whose entries all fall below
// `pivot_tol` relative to the row's pre-reduction magnitude are dependent and
// dropped. Constraint rows coming from permutation actions stay 2-sparse
// throughout, which keeps elimination effectively linear-time.
class RowReducer {
public:
    explicit RowReducer(int ncols, double pivot_tol = 1e-9);

    // Returns true if the row increased the rank.
    bool insert_dense(const Vec& row);
    bool insert_sparse(const std::vector<std::pair<int, double>>& row);

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }

    // Basis of the null space of the inserted rows, one dense vector per free
    // column. Each basis vector has a 1 at its free column.
    std::vector<Vec> null_space() const;

private:
    struct EchelonRow {
        int pivot_col;
        std::vector<std::pair<int, double>> entries;  // sorted by column, pivot value 1
    };

    int ncols_;
    double pivot_tol_;
    std::vector<EchelonRow> rows_;          // in insertion order
    std::vector<int> pivot_of_col_;         // col -> index into rows_, or -1
};

// Rank of a stack of dense vectors (e.g. vectorized layer matrices).
int rank_of(const std::vector<Vec>& rows, double pivot_tol = 1e-9);

// Deterministic random numbers (raw mt19937_64 bits + Box-Muller) so sampled
// fixtures are identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    double uniform();                    // [0, 1)
    double normal();                     // standard normal
    uint64_t next_u64();
    int uniform_int(int lo, int hi);     // inclusive bounds
    Vec normal_vec(int n);

private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace equilin

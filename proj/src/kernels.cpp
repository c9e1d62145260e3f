#include "prefopt/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace prefopt::kernels {

// Per-row bodies shared by the serial and parallel entry points. Keeping one
// body per kernel guarantees the accumulation order is identical in both.
namespace {

inline void matmul_nn_row(const double* a, const double* b, double* c, int i, int k, int n) {
    double* crow = c + static_cast<long>(i) * n;
    std::memset(crow, 0, sizeof(double) * static_cast<size_t>(n));
    const double* arow = a + static_cast<long>(i) * k;
    for (int p = 0; p < k; ++p) {
        const double av = arow[p];
        const double* brow = b + static_cast<long>(p) * n;
        for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
}

inline void matmul_nt_row(const double* a, const double* b, double* c, int i, int k, int n) {
    const double* arow = a + static_cast<long>(i) * k;
    double* crow = c + static_cast<long>(i) * n;
    for (int j = 0; j < n; ++j) {
        const double* brow = b + static_cast<long>(j) * k;
        double acc = 0.0;
        for (int p = 0; p < k; ++p) acc += arow[p] * brow[p];
        crow[j] = acc;
    }
}

inline void matmul_tn_row(const double* a, const double* b, double* c, int i, int k, int n, int m) {
    (void)m;
    double* crow = c + static_cast<long>(i) * n;
    std::memset(crow, 0, sizeof(double) * static_cast<size_t>(n));
    for (int p = 0; p < k; ++p) {
        const double av = a[static_cast<long>(p) * m + i];
        const double* brow = b + static_cast<long>(p) * n;
        for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
}

inline void log_softmax_row(const double* x, double* y, int r, int cols) {
    const double* xr = x + static_cast<long>(r) * cols;
    double* yr = y + static_cast<long>(r) * cols;
    double mx = xr[0];
    for (int j = 1; j < cols; ++j) mx = std::max(mx, xr[j]);
    double sum = 0.0;
    for (int j = 0; j < cols; ++j) sum += std::exp(xr[j] - mx);
    const double lse = mx + std::log(sum);
    for (int j = 0; j < cols; ++j) yr[j] = xr[j] - lse;
}

inline void causal_softmax_row(const double* x, double* y, int t, int n) {
    const double* xr = x + static_cast<long>(t) * n;
    double* yr = y + static_cast<long>(t) * n;
    double mx = xr[0];
    for (int j = 1; j <= t; ++j) mx = std::max(mx, xr[j]);
    double sum = 0.0;
    for (int j = 0; j <= t; ++j) {
        yr[j] = std::exp(xr[j] - mx);
        sum += yr[j];
    }
    const double inv = 1.0 / sum;
    for (int j = 0; j <= t; ++j) yr[j] *= inv;
    for (int j = t + 1; j < n; ++j) yr[j] = 0.0;
}

inline void rms_norm_row(const double* x, const double* gain, double* y, double* inv_rms,
                         int r, int cols, double eps) {
    const double* xr = x + static_cast<long>(r) * cols;
    double* yr = y + static_cast<long>(r) * cols;
    double ms = 0.0;
    for (int j = 0; j < cols; ++j) ms += xr[j] * xr[j];
    ms /= cols;
    const double inv = 1.0 / std::sqrt(ms + eps);
    inv_rms[r] = inv;
    for (int j = 0; j < cols; ++j) yr[j] = gain[j] * xr[j] * inv;
}

}  // namespace

void matmul_nn(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) matmul_nn_row(a, b, c, i, k, n);
}

void matmul_nt(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) matmul_nt_row(a, b, c, i, k, n);
}

void matmul_tn(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) matmul_tn_row(a, b, c, i, k, n, m);
}

void log_softmax_rows(const double* x, double* y, int rows, int cols) {
#pragma omp parallel for schedule(static)
    for (int r = 0; r < rows; ++r) log_softmax_row(x, y, r, cols);
}

void causal_softmax_rows(const double* x, double* y, int n) {
#pragma omp parallel for schedule(static)
    for (int t = 0; t < n; ++t) causal_softmax_row(x, y, t, n);
}

void rms_norm_rows(const double* x, const double* gain, double* y, double* inv_rms,
                   int rows, int cols, double eps) {
#pragma omp parallel for schedule(static)
    for (int r = 0; r < rows; ++r) rms_norm_row(x, gain, y, inv_rms, r, cols, eps);
}

namespace serial {

void matmul_nn(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) matmul_nn_row(a, b, c, i, k, n);
}

void matmul_nt(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) matmul_nt_row(a, b, c, i, k, n);
}

void matmul_tn(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) matmul_tn_row(a, b, c, i, k, n, m);
}

void log_softmax_rows(const double* x, double* y, int rows, int cols) {
    for (int r = 0; r < rows; ++r) log_softmax_row(x, y, r, cols);
}

void causal_softmax_rows(const double* x, double* y, int n) {
    for (int t = 0; t < n; ++t) causal_softmax_row(x, y, t, n);
}

void rms_norm_rows(const double* x, const double* gain, double* y, double* inv_rms,
                   int rows, int cols, double eps) {
    for (int r = 0; r < rows; ++r) rms_norm_row(x, gain, y, inv_rms, r, cols, eps);
}

}  // namespace serial

}  // namespace prefopt::kernels

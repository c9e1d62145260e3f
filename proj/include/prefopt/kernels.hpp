#pragma once

namespace prefopt::kernels {

// Dense row-major compute kernels. Each kernel has an OpenMP-parallel
// implementation (the default used by the engine) and a plain serial
// reference in kernels::serial. The parallel versions split work so that
// every output element is produced by exactly one thread with the same
// accumulation order as the serial code, so the two must agree bit for bit;
// tests and tools/bench_kernels rely on that.

// C[m x n] = A[m x k] * B[k x n]
void matmul_nn(const double* a, const double* b, double* c, int m, int k, int n);
// C[m x n] = A[m x k] * B[n x k]^T
void matmul_nt(const double* a, const double* b, double* c, int m, int k, int n);
// C[m x n] = A[k x m]^T * B[k x n]
void matmul_tn(const double* a, const double* b, double* c, int m, int k, int n);

// Row-wise log-softmax with max subtraction.
void log_softmax_rows(const double* x, double* y, int rows, int cols);

// Row t is a softmax over columns 0..t, zero above the diagonal (rows == cols).
void causal_softmax_rows(const double* x, double* y, int n);

// y[r,c] = gain[c] * x[r,c] / sqrt(mean_c(x[r,:]^2) + eps); inv_rms[r] saved
// for the backward pass.
void rms_norm_rows(const double* x, const double* gain, double* y, double* inv_rms,
                   int rows, int cols, double eps);

namespace serial {
void matmul_nn(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_nt(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_tn(const double* a, const double* b, double* c, int m, int k, int n);
void log_softmax_rows(const double* x, double* y, int rows, int cols);
void causal_softmax_rows(const double* x, double* y, int n);
void rms_norm_rows(const double* x, const double* gain, double* y, double* inv_rms,
                   int rows, int cols, double eps);
}  // namespace serial

}  // namespace prefopt::kernels

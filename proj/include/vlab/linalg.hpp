#pragma once

#include "vlab/tensor.hpp"

namespace vlab {

/// Result of a symmetric eigendecomposition: Q * diag(values) * Q^T
/// reconstructs the input. Eigenvalues are sorted non-increasing and the
/// columns of `vectors` follow that order.
struct EigenDecomposition {
    Tensor values;  // (m)
    Tensor vectors; // (m x m), orthonormal columns
};

// C = A * B for row-major 2-D tensors (n x m) * (m x p).
Tensor matmul(const Tensor& a, const Tensor& b);

// C = A^T * B for (n x m)^T * (n x p) -> (m x p).
Tensor matmul_tn(const Tensor& a, const Tensor& b);

// C = A * B^T for (n x m) * (p x m)^T -> (n x p).
Tensor matmul_nt(const Tensor& a, const Tensor& b);

Tensor transpose(const Tensor& a);

/// Column means of an (n x m) matrix.
Tensor column_mean(const Tensor& x);

/// Per-column population (divide by n) or sample (divide by n-1) variance.
Tensor column_variance(const Tensor& x, bool population = true);

/// Covariance matrix of the rows of x. Population mode divides by n,
/// sample mode by n-1 (requires n >= 2).
Tensor covariance(const Tensor& x, bool population = true);

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Convergence: off-diagonal Frobenius norm <= 1e-12 x diagonal norm,
/// at most 100 sweeps. Input symmetry is checked against `sym_tol`.
EigenDecomposition sym_eig(const Tensor& s, double sym_tol = 1e-9);

/// Principal square root of a symmetric PSD matrix. Eigenvalues in
/// [-1e-9, 0) are clipped to zero; anything below -1e-9 is rejected.
Tensor sqrtm_psd(const Tensor& s);

double trace(const Tensor& s);

double frobenius_norm(const Tensor& a);

} // namespace vlab

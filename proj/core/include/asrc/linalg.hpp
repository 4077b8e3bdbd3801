#pragma once

#include <Eigen/Dense>

namespace asrc {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Spectral norm (largest singular value) by power iteration on A^T A.
double spectral_norm(const Mat& a, int max_iters = 50, double tol = 1e-10);

/// Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.
/// Only the lower triangle is read after symmetrisation (A + A^T) / 2.
Vec symmetric_eigenvalues(const Mat& a, double tol = 1e-12);

double min_eigenvalue(const Mat& a);
double max_eigenvalue(const Mat& a);

/// True when `a` is square, symmetric to `sym_tol` and its smallest
/// eigenvalue is strictly positive.
bool is_positive_definite(const Mat& a, double sym_tol = 1e-9);

/// ||[Omega I]||, the norm of the map xi -> e_f.
double gamma_norm(const Mat& omega);

bool all_finite(const Vec& v);

}  // namespace asrc

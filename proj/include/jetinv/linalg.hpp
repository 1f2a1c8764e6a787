#pragma once

#include <optional>
#include <vector>

#include "jetinv/rational.hpp"

namespace jetinv {

using QVec = std::vector<Rat>;
using QMat = std::vector<std::vector<Rat>>;
using DVec = std::vector<double>;
using DMat = std::vector<std::vector<double>>;

QMat qmat_zero(int rows, int cols);
QMat qmat_identity(int n);
QMat qmat_transpose(const QMat& a);
QMat qmat_mul(const QMat& a, const QMat& b);
QVec qmat_vec(const QMat& a, const QVec& v);
QMat qmat_add(const QMat& a, const QMat& b);
QMat qmat_sub(const QMat& a, const QMat& b);
QMat qmat_scale(const QMat& a, const Rat& c);
bool qmat_equal(const QMat& a, const QMat& b);

Rat qvec_dot(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);

/// Exact determinant (Gaussian elimination over Q).
Rat qmat_det(QMat a);

/// Exact inverse; empty when singular.
std::optional<QMat> qmat_inverse(QMat a);

/// Exact rank over Q.
int qmat_rank(QMat a);

/// Solves a x = b exactly; empty when singular.
std::optional<QVec> qmat_solve(QMat a, QVec b);

/// Powers A^0..A^k of a square rational matrix.
std::vector<QMat> qmat_powers(const QMat& a, int k);

DMat dmat_of(const QMat& a);
DVec dvec_of(const QVec& v);

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations with
/// a fixed sweep order, run until the largest off-diagonal entry falls below
/// tol. Eigenvalues ascending; eigenvectors returned as columns, orthonormal,
/// each sign-fixed so its first component of magnitude > 1e-12 is positive.
struct EigenSym {
    DVec eigenvalues;
    DMat vectors; // vectors[i][k] = component i of eigenvector k
};

EigenSym jacobi_eigen(DMat a, double tol = 1e-12, int max_sweeps = 64);

} // namespace jetinv

#pragma once

#include <vector>

#include "commute/matrix.hpp"

namespace commute {

/// A = vectors * diag(values) * vectors^*, values ascending.
struct EigenSystem {
    std::vector<double> values;
    Matrix vectors;
};

/// Cyclic complex Jacobi rotations, run to machine precision. Deterministic
/// (fixed sweep order). Intended for n <= 64.
EigenSystem eig_hermitian(const Matrix& a);

/// Spectral norm of a Hermitian matrix: max |eigenvalue|.
double operator_norm_hermitian(const Matrix& a);

/// Spectral norm of a general matrix via eig of A*A.
double operator_norm(const Matrix& a);

/// Inverse by LU with partial pivoting. Throws SingularMatrix.
Matrix inverse(const Matrix& a);

}  // namespace commute

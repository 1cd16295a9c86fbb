#pragma once

#include "rk/types.hpp"

namespace rk {

struct EigenDecomposition {
  Vector values;   // ascending
  Matrix vectors;  // columns, same order as values
};

/// Eigenvalues of a symmetric matrix via cyclic Jacobi rotations, sorted
/// ascending. Sweeps until the off-diagonal Frobenius norm falls below
/// 1e-13 * ||A||_F. Rejects matrices asymmetric beyond 1e-12 relative.
/// Supported up to n = 2048.
Vector symmetric_eigenvalues(const Matrix& a);

EigenDecomposition jacobi_eigensystem(const Matrix& a);

}  // namespace rk

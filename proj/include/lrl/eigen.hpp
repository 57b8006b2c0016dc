#pragma once

#include <vector>

#include "lrl/matrix.hpp"

namespace lrl {

// Relative symmetry defect accepted by symmetric_eigen.
inline constexpr double kSymmetryTolerance = 1e-12;

// Full-sweep cap for the cyclic Jacobi iteration.
inline constexpr int kMaxJacobiSweeps = 100;

struct SymmetricEigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  DenseMatrix eigenvectors;         // orthonormal columns, same order
};

// Cyclic Jacobi rotations; deterministic sweep order, so identical inputs
// give identical decompositions. Eigenvector sign convention: the component
// of largest magnitude is nonnegative.
SymmetricEigenDecomposition symmetric_eigen(const DenseMatrix& m);

// max_k |lambda_k|; for symmetric matrices this equals the operator norm.
double operator_norm(const DenseMatrix& m);

}  // namespace lrl

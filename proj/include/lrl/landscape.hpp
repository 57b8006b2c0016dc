#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lrl/eigen.hpp"
#include "lrl/lattice_operator.hpp"
#include "lrl/matrix.hpp"

namespace lrl {

// Bound margins below this are a failure; absolute because the compared
// quantities are O(1) after eigenvector normalization.
inline constexpr double kBoundMarginFloor = -1e-9;

// Eigenvalues at or below this, in a regime that guarantees a positive
// spectrum, signal a bug rather than a borderline instance.
inline constexpr double kSpectrumFloor = 1e-12;

// Relative floor for Green's-function entries treated as nonnegative.
inline constexpr double kGreenEntryRelFloor = 1e-12;

struct NeumannCertificate {
  double contraction_q;   // computed ||H0|| * max_j 1/v_j
  double analytic_q;      // 2*sum(a) * max_j 1/v_j, reported for comparison
  int truncation_order;   // K
  double error_bound;     // max_j(1/v_j) * q^{K+1} / (1 - q)
};

enum class GreenMethod { Direct, Series };

struct GreenFunction {
  DenseMatrix g;
  GreenMethod method;
  std::optional<NeumannCertificate> certificate;  // set for Series
  double min_entry;
};

struct LandscapeReport {
  std::vector<double> u;
  SymmetricEigenDecomposition eigenpairs;
  // Per eigenpair: min_j (lambda * u_j - |x_j| / max_k |x_k|)
  std::vector<double> margins;
  bool positivity_ok;  // all u_j > 0
  bool bound_ok;       // all margins >= kBoundMarginFloor
  double min_eigenvalue;
};

// G = H^-1 by LU solve. Refuses Violated regimes unless overridden; under an
// override the positivity guarantees are suspended and SingularMatrix may
// surface.
GreenFunction green_direct(const LatticeOperator& op,
                           bool override_violated = false);

// Truncated power series sum_{k=0..K} (V^-1 H0)^k V^-1 with a convergence
// certificate. The contraction factor uses the computed operator norm of H0,
// which stays below 1 even at the soft boundary; the analytic 2*sum(a) bound
// would be useless there.
GreenFunction green_series(const LatticeOperator& op, int order,
                           bool override_violated = false);

// The contraction factor green_series certifies against.
double contraction_factor(const LatticeOperator& op);

// u_j = sum_k G_jk (row sums).
std::vector<double> landscape_function(const GreenFunction& green);

// Checks |x_j| / max|x_k| <= lambda * u_j for every eigenpair, and spectrum
// positivity where the regime guarantees it. u and eig must come from the
// same operator.
LandscapeReport verify_landscape_bound(const LatticeOperator& op,
                                       std::span<const double> u,
                                       const SymmetricEigenDecomposition& eig);

}  // namespace lrl

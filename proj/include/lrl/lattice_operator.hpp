#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrl/matrix.hpp"

namespace lrl {

// Hopping amplitudes a_1 .. a_{n-1}; entry a_k couples sites at distance k.
// All amplitudes are nonnegative; n = 1 carries an empty profile.
class HoppingProfile {
 public:
  HoppingProfile(std::size_t lattice_size, std::vector<double> coefficients);

  static HoppingProfile nearest_neighbor(std::size_t lattice_size,
                                         double amplitude);
  // a_k = rho^k, 0 <= rho < 1
  static HoppingProfile geometric(std::size_t lattice_size, double rho);

  std::size_t lattice_size() const { return lattice_size_; }
  std::span<const double> coefficients() const { return coefficients_; }

  // 2 * sum_k a_k; the quantity the dominance conditions compare against.
  double hop_sum() const { return hop_sum_; }
  bool all_zero() const;

 private:
  std::size_t lattice_size_;
  std::vector<double> coefficients_;
  double hop_sum_;
};

// On-site potential v_1 .. v_n, each strictly positive.
class PotentialVector {
 public:
  explicit PotentialVector(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double min_value() const { return min_value_; }
  double max_inverse() const { return 1.0 / min_value_; }  // ||V^-1||

 private:
  std::vector<double> values_;
  double min_value_;
};

enum class RegimeKind { Strict, SoftBoundary, Violated };

const char* to_string(RegimeKind kind);

// Classification of min_j v_j against 2*sum(a). Margins within
// 1e-12 * hop_sum of zero count as the soft boundary (only meaningful when
// some hopping is present; an all-zero profile with positive potential is
// Strict).
struct ConditionRegime {
  RegimeKind kind;
  double margin;   // min_j v_j - 2*sum(a), reported exactly
  double hop_sum;  // 2*sum(a)
};

inline constexpr double kSoftBoundaryRelTolerance = 1e-12;

// H = V - H0, dense symmetric, with its condition regime. Violated regimes
// are representable; downstream operations decide whether to refuse them.
class LatticeOperator {
 public:
  LatticeOperator(PotentialVector potential, HoppingProfile hopping);

  const DenseMatrix& h() const { return h_; }
  const PotentialVector& potential() const { return potential_; }
  const HoppingProfile& hopping() const { return hopping_; }
  const ConditionRegime& regime() const { return regime_; }
  std::size_t size() const { return h_.rows(); }

 private:
  PotentialVector potential_;
  HoppingProfile hopping_;
  DenseMatrix h_;
  ConditionRegime regime_;
};

// Symmetric Toeplitz matrix with zero diagonal and a_{|i-j|} off it.
DenseMatrix build_hopping_matrix(const HoppingProfile& profile);

ConditionRegime classify_condition(const PotentialVector& potential,
                                   const HoppingProfile& profile);

LatticeOperator assemble(const PotentialVector& potential,
                         const HoppingProfile& profile);

// The analytic norm estimate 2*sum(a) >= ||H0||; strict whenever some
// a_k > 0.
double hopping_norm_bound(const HoppingProfile& profile);

}  // namespace lrl

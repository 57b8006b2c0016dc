#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrl/matrix.hpp"

namespace lrl {

// A pivot below this fraction of its row's scale is treated as singular.
inline constexpr double kPivotRelThreshold = 1e-13;

// LU factorization with partial pivoting. Factor once, solve many
// right-hand sides.
class LuFactorization {
 public:
  explicit LuFactorization(const DenseMatrix& m);

  std::vector<double> solve(std::span<const double> rhs) const;
  std::size_t size() const { return lu_.rows(); }

 private:
  DenseMatrix lu_;                  // L (unit diagonal, below) and U (on/above)
  std::vector<std::size_t> perm_;   // row permutation applied to inputs
};

std::vector<double> solve_linear(const DenseMatrix& m,
                                 std::span<const double> rhs);

}  // namespace lrl

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrl/matrix.hpp"

namespace lrl {

enum class ShiftSide { Left, Right };

// Single off-diagonal of ones: R_k has them at column - row = k, L_k at
// row - column = k. Satisfies R_k = (R_1)^k and L_k = (L_1)^k exactly.
class ShiftMatrix {
 public:
  ShiftMatrix(std::size_t size, std::size_t offset, ShiftSide side);

  DenseMatrix realize() const;

  std::size_t size() const { return size_; }
  std::size_t offset() const { return offset_; }
  ShiftSide side() const { return side_; }

 private:
  std::size_t size_;
  std::size_t offset_;
  ShiftSide side_;
};

// Basis reordering that turns A_j(n) into a direct sum of nearest-neighbor
// blocks A_1(k_i). permutation is 0-based: new index a holds old index
// permutation[a]; block i has size k_i = floor((n - i) / j) + 1 (1-based i).
struct BlockDecomposition {
  std::vector<std::size_t> permutation;
  std::vector<std::size_t> block_sizes;
};

// A_j(n) = L_j + R_j: symmetric 0/1 matrix with ones exactly at index
// distance j. n = 1 admits j = 1 as the 1x1 zero matrix.
DenseMatrix build_offdiagonal(std::size_t n, std::size_t j);

// Groups indices by residue mod j: (1, 1+j, 1+2j, ...), then (2, 2+j, ...),
// each group in increasing order.
BlockDecomposition block_permutation(std::size_t n, std::size_t j);

// U m U^T for the permutation matrix U, realized by index remapping with no
// floating-point arithmetic: out(a, b) = m(perm[a], perm[b]).
DenseMatrix conjugate_by_permutation(const DenseMatrix& m,
                                     std::span<const std::size_t> perm);

// Eigenvalues of A_1(n) in closed form: 2*cos(k*pi/(n+1)), k = 1..n,
// ascending. All lie strictly inside (-2, 2).
std::vector<double> chebyshev_spectrum(std::size_t n);

// 2 - ||A_j(n)||, checked positive, with the norm cross-checked against the
// max over the blocks of its decomposition (within 1e-10).
double verify_strict_gap(std::size_t n, std::size_t j);

}  // namespace lrl

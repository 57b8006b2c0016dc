#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lrl {

// Dense row-major real matrix. Construction from explicit entries rejects
// NaN and infinity; code that fills a zero-initialized matrix in place is
// responsible for keeping entries finite.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  double* row(std::size_t i) { return entries_.data() + i * cols_; }
  const double* row(std::size_t i) const { return entries_.data() + i * cols_; }

  std::span<const double> entries() const { return entries_; }
  double* data() { return entries_.data(); }
  const double* data() const { return entries_.data(); }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// C = a * b
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

// y = m * x
std::vector<double> multiply(const DenseMatrix& m, std::span<const double> x);

// m += other (entrywise)
void add_in_place(DenseMatrix& m, const DenseMatrix& other);

double max_abs_entry(const DenseMatrix& m);
double min_entry(const DenseMatrix& m);

// max_ij |m(i,j) - m(j,i)| over a square matrix
double max_symmetry_defect(const DenseMatrix& m);

// ||m*x - rhs||_inf
double residual_inf(const DenseMatrix& m, std::span<const double> x,
                    std::span<const double> rhs);

// max_ij |a(i,j) - b(i,j)| for same-shape matrices
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace lrl

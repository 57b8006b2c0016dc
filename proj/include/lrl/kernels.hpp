#pragma once

#include <cstddef>

namespace lrl::kernels {

// Double-precision streaming primitives behind every dense inner loop
// (LU elimination, Jacobi rotations, matrix products, row sums).
//
// Each entry exists in a scalar reference variant and, on x86-64 CPUs with
// AVX2, a vectorized variant; the backend is picked once per process.
// Element-wise kernels (axpy, scale, unit-stride rot) produce bitwise
// identical results across backends. Reductions (dot, sum) may differ in the
// last bits because the vector variants accumulate per lane; max_abs is
// order-independent and stays exact.
struct Kernels {
  const char* name;

  // y[i] += a * x[i]
  void (*axpy)(std::size_t n, double a, const double* x, double* y);

  // x[i] *= a
  void (*scale)(std::size_t n, double a, double* x);

  // Plane rotation: (x[i], y[i]) <- (c*x[i] - s*y[i], s*x[i] + c*y[i]),
  // reading x at stride incx and y at stride incy. Vectorized only for
  // unit strides.
  void (*rot)(std::size_t n, double* x, std::ptrdiff_t incx, double* y,
              std::ptrdiff_t incy, double c, double s);

  double (*dot)(std::size_t n, const double* x, const double* y);
  double (*sum)(std::size_t n, const double* x);
  double (*max_abs)(std::size_t n, const double* x);
};

const Kernels& scalar_kernels();

// Null when the build target or the running CPU lacks AVX2.
const Kernels* avx2_kernels();

// The backend selected at startup: AVX2 when available, scalar otherwise.
const Kernels& active_kernels();

inline void axpy(std::size_t n, double a, const double* x, double* y) {
  active_kernels().axpy(n, a, x, y);
}

inline void scale(std::size_t n, double a, double* x) {
  active_kernels().scale(n, a, x);
}

inline void rot(std::size_t n, double* x, std::ptrdiff_t incx, double* y,
                std::ptrdiff_t incy, double c, double s) {
  active_kernels().rot(n, x, incx, y, incy, c, s);
}

inline double dot(std::size_t n, const double* x, const double* y) {
  return active_kernels().dot(n, x, y);
}

inline double sum(std::size_t n, const double* x) {
  return active_kernels().sum(n, x);
}

inline double max_abs(std::size_t n, const double* x) {
  return active_kernels().max_abs(n, x);
}

}  // namespace lrl::kernels

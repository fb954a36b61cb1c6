#pragma once

#include <cstddef>

// Data-parallel inner loops behind every statistic in this library.
//
// Each kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2/FMA variant. The active variant is chosen once at startup from CPU
// feature detection; both variants stay callable so the test suite can check
// them against each other on the same inputs.

namespace hdbf::kernels {

// dot(a, b) = sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// sumsq(a) = sum_i a[i]^2
double sumsq(const double* a, std::size_t n);

// sum(a) = sum_i a[i]
double sum(const double* a, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// Name of the variant running behind the wrappers above: "avx2" or "scalar".
const char* active_backend();

// True when the AVX2/FMA entry points below may be called on this machine.
bool avx2_available();

// Scalar reference implementations.
double dot_scalar(const double* a, const double* b, std::size_t n);
double sumsq_scalar(const double* a, std::size_t n);
double sum_scalar(const double* a, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
// AVX2/FMA implementations; calling them on a CPU without AVX2 support is
// undefined, guard with avx2_available().
double dot_avx2(const double* a, const double* b, std::size_t n);
double sumsq_avx2(const double* a, std::size_t n);
double sum_avx2(const double* a, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
#endif

}  // namespace hdbf::kernels

#pragma once

#include <cstddef>
#include <string>

// Dense double-precision kernels behind the distance, pooling and update
// loops. Scalar reference implementations always exist; vector variants
// (AVX2 on x86-64, NEON on aarch64) are selected once at startup based on
// CPU support and can be overridden with the MIRROR_KERNELS environment
// variable ("scalar", "avx2", "neon", "auto").
//
// Reductions in the vector paths use multiple accumulators, so dot/l2_sq/sum
// may differ from the scalar path in the last bits. Elementwise kernels
// (max_accumulate, add_accumulate, axpy, scale) are bit-exact across
// backends.
namespace mirror::kernels {

enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
const char* backend_name();

// Returns false if the requested backend is not available on this CPU.
bool set_backend(Backend backend);

double dot(const double* a, const double* b, size_t n);
double l2_sq(const double* a, const double* b, size_t n);
double sum(const double* x, size_t n);
void max_accumulate(double* acc, const double* x, size_t n);
void add_accumulate(double* acc, const double* x, size_t n);
void axpy(double alpha, const double* x, double* y, size_t n);
void scale(double* x, double s, size_t n);

namespace scalar {
double dot(const double* a, const double* b, size_t n);
double l2_sq(const double* a, const double* b, size_t n);
double sum(const double* x, size_t n);
void max_accumulate(double* acc, const double* x, size_t n);
void add_accumulate(double* acc, const double* x, size_t n);
void axpy(double alpha, const double* x, double* y, size_t n);
void scale(double* x, double s, size_t n);
}  // namespace scalar

#if defined(MIRROR_BUILD_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, size_t n);
double l2_sq(const double* a, const double* b, size_t n);
double sum(const double* x, size_t n);
void max_accumulate(double* acc, const double* x, size_t n);
void add_accumulate(double* acc, const double* x, size_t n);
void axpy(double alpha, const double* x, double* y, size_t n);
void scale(double* x, double s, size_t n);
}  // namespace avx2
#endif

#if defined(MIRROR_BUILD_NEON)
namespace neon {
double dot(const double* a, const double* b, size_t n);
double l2_sq(const double* a, const double* b, size_t n);
double sum(const double* x, size_t n);
void max_accumulate(double* acc, const double* x, size_t n);
void add_accumulate(double* acc, const double* x, size_t n);
void axpy(double alpha, const double* x, double* y, size_t n);
void scale(double* x, double s, size_t n);
}  // namespace neon
#endif

}  // namespace mirror::kernels

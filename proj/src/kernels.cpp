#include "mirror/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mirror::kernels {

namespace {

struct Vtable {
  Backend backend;
  double (*dot)(const double*, const double*, size_t);
  double (*l2_sq)(const double*, const double*, size_t);
  double (*sum)(const double*, size_t);
  void (*max_accumulate)(double*, const double*, size_t);
  void (*add_accumulate)(double*, const double*, size_t);
  void (*axpy)(double, const double*, double*, size_t);
  void (*scale)(double*, double, size_t);
};

constexpr Vtable kScalarTable = {
    Backend::Scalar,       scalar::dot,  scalar::l2_sq, scalar::sum,
    scalar::max_accumulate, scalar::add_accumulate, scalar::axpy, scalar::scale,
};

#if defined(MIRROR_BUILD_AVX2)
constexpr Vtable kAvx2Table = {
    Backend::Avx2,        avx2::dot,  avx2::l2_sq, avx2::sum,
    avx2::max_accumulate, avx2::add_accumulate, avx2::axpy, avx2::scale,
};
#endif

#if defined(MIRROR_BUILD_NEON)
constexpr Vtable kNeonTable = {
    Backend::Neon,        neon::dot,  neon::l2_sq, neon::sum,
    neon::max_accumulate, neon::add_accumulate, neon::axpy, neon::scale,
};
#endif

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(MIRROR_BUILD_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(MIRROR_BUILD_NEON)
      return true;  // NEON TU is only built for aarch64, where it is baseline
#else
      return false;
#endif
  }
  return false;
}

const Vtable* table_for(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return &kScalarTable;
    case Backend::Avx2:
#if defined(MIRROR_BUILD_AVX2)
      return &kAvx2Table;
#else
      return nullptr;
#endif
    case Backend::Neon:
#if defined(MIRROR_BUILD_NEON)
      return &kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Backend pick_default() {
  if (const char* env = std::getenv("MIRROR_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::Avx2)) return Backend::Avx2;
    if (std::strcmp(env, "neon") == 0 && backend_available(Backend::Neon)) return Backend::Neon;
    // "auto" or unrecognized value falls through to detection
  }
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

const Vtable* g_table = table_for(pick_default());

}  // namespace

Backend active_backend() { return g_table->backend; }

const char* backend_name() {
  switch (g_table->backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool set_backend(Backend backend) {
  if (!backend_available(backend)) return false;
  g_table = table_for(backend);
  return true;
}

double dot(const double* a, const double* b, size_t n) { return g_table->dot(a, b, n); }
double l2_sq(const double* a, const double* b, size_t n) { return g_table->l2_sq(a, b, n); }
double sum(const double* x, size_t n) { return g_table->sum(x, n); }
void max_accumulate(double* acc, const double* x, size_t n) { g_table->max_accumulate(acc, x, n); }
void add_accumulate(double* acc, const double* x, size_t n) { g_table->add_accumulate(acc, x, n); }
void axpy(double alpha, const double* x, double* y, size_t n) { g_table->axpy(alpha, x, y, n); }
void scale(double* x, double s, size_t n) { g_table->scale(x, s, n); }

}  // namespace mirror::kernels

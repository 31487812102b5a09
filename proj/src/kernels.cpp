#include "morrey/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace morrey::kernels {

namespace scalar {

double sum_abs(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i]);
  return s;
}

double sum_sq(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

}  // namespace scalar

namespace {

struct Table {
  double (*sum_abs)(const double*, std::size_t);
  double (*sum_sq)(const double*, std::size_t);
  double (*max_abs)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
};

constexpr Table kScalar{scalar::sum_abs, scalar::sum_sq, scalar::max_abs, scalar::dot};

bool cpu_has(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Table table_for(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return kScalar;
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::Avx2:
      return Table{avx2::sum_abs, avx2::sum_sq, avx2::max_abs, avx2::dot};
#endif
#if defined(__aarch64__)
    case Backend::Neon:
      return Table{neon::sum_abs, neon::sum_sq, neon::max_abs, neon::dot};
#endif
    default:
      return kScalar;
  }
}

Backend pick_default() {
  if (const char* env = std::getenv("MORREY_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has(Backend::Avx2)) return Backend::Avx2;
    if (std::strcmp(env, "neon") == 0 && cpu_has(Backend::Neon)) return Backend::Neon;
  }
  if (cpu_has(Backend::Avx2)) return Backend::Avx2;
  if (cpu_has(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

struct State {
  Backend backend;
  Table table;
  State() : backend(pick_default()), table(table_for(backend)) {}
};

State& state() {
  static State s;
  return s;
}

}  // namespace

Backend active() { return state().backend; }

const char* backend_name() {
  switch (active()) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "scalar";
}

bool available(Backend b) { return cpu_has(b); }

void force(Backend b) {
  if (!cpu_has(b)) throw std::invalid_argument("kernels: backend not available on this machine");
  state().backend = b;
  state().table = table_for(b);
}

double sum_abs(const double* x, std::size_t n) { return state().table.sum_abs(x, n); }
double sum_sq(const double* x, std::size_t n) { return state().table.sum_sq(x, n); }
double max_abs(const double* x, std::size_t n) { return state().table.max_abs(x, n); }
double dot(const double* x, const double* y, std::size_t n) { return state().table.dot(x, y, n); }

double sum_abs_pow(const double* x, std::size_t n, double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::pow(std::fabs(x[i]), p);
  return s;
}

}  // namespace morrey::kernels

#pragma once

#include <cstddef>
#include <string>

namespace morrey::kernels {

enum class Backend { Scalar, Avx2, Neon };

/// Backend selected for this process. Picked once at first use: the widest
/// instruction set the CPU supports, unless the environment variable
/// MORREY_KERNELS (values: scalar, avx2, neon) overrides it.
Backend active();
const char* backend_name();

/// Forces a backend (tests use this to compare implementations).
/// Throws std::invalid_argument if the backend is not available on this CPU.
void force(Backend b);

/// Whether a backend can run on this machine/build.
bool available(Backend b);

// Data-parallel reductions behind the norm evaluations. SIMD variants agree
// with the scalar reference up to reassociation of the accumulation
// (equivalence-tested at 1e-13 relative).
double sum_abs(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);

/// sum_i |x_i|^p for general p > 0. No vector variant: there is no packed
/// pow; all backends share the scalar loop.
double sum_abs_pow(const double* x, std::size_t n, double p);

// Reference implementations, callable directly for equivalence tests.
namespace scalar {
double sum_abs(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double sum_abs(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double sum_abs(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace neon
#endif

}  // namespace morrey::kernels

#pragma once

#include <cstddef>

// Inner loops of the dense simplex tableau. Every kernel has a scalar
// reference implementation and SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected once at runtime. The scalar axpy uses std::fma so all
// backends round identically; the equivalence tests compare them bitwise.
namespace dicut::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// dst[i] = fma(-m, src[i], dst[i])  — the tableau row elimination step.
void axpy_neg(double* dst, const double* src, double m, std::size_t n);

// dst[i] *= s  — pivot row normalization.
void scale(double* dst, double s, std::size_t n);

// Smallest i with v[i] < bound, else npos  — Bland pricing.
std::size_t find_first_below(const double* v, std::size_t n, double bound);

// Index of the minimum entry strictly below bound, lowest index on ties,
// else npos  — Dantzig pricing.
std::size_t argmin_below(const double* v, std::size_t n, double bound);

// Name of the backend the dispatcher picked ("scalar", "avx2", "neon").
// DICUT_KERNELS=scalar in the environment forces the reference path.
const char* active_backend();

namespace scalar {
void axpy_neg(double* dst, const double* src, double m, std::size_t n);
void scale(double* dst, double s, std::size_t n);
std::size_t find_first_below(const double* v, std::size_t n, double bound);
std::size_t argmin_below(const double* v, std::size_t n, double bound);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
bool cpu_has_avx2();
namespace avx2 {
void axpy_neg(double* dst, const double* src, double m, std::size_t n);
void scale(double* dst, double s, std::size_t n);
std::size_t find_first_below(const double* v, std::size_t n, double bound);
std::size_t argmin_below(const double* v, std::size_t n, double bound);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void axpy_neg(double* dst, const double* src, double m, std::size_t n);
void scale(double* dst, double s, std::size_t n);
std::size_t find_first_below(const double* v, std::size_t n, double bound);
std::size_t argmin_below(const double* v, std::size_t n, double bound);
}  // namespace neon
#endif

}  // namespace dicut::kernels

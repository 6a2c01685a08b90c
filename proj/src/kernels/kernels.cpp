#include "dicut/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace dicut::kernels {

namespace scalar {

void axpy_neg(double* dst, const double* src, double m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = std::fma(-m, src[i], dst[i]);
}

void scale(double* dst, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] *= s;
}

std::size_t find_first_below(const double* v, std::size_t n, double bound) {
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] < bound) return i;
    return npos;
}

std::size_t argmin_below(const double* v, std::size_t n, double bound) {
    std::size_t best = npos;
    double best_val = bound;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] < best_val) {
            best_val = v[i];
            best = i;
        }
    }
    return best;
}

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"); }
#endif

namespace {

struct Backend {
    void (*axpy_neg)(double*, const double*, double, std::size_t);
    void (*scale)(double*, double, std::size_t);
    std::size_t (*find_first_below)(const double*, std::size_t, double);
    std::size_t (*argmin_below)(const double*, std::size_t, double);
    const char* name;
};

Backend pick_backend() {
    const char* forced = std::getenv("DICUT_KERNELS");
    bool force_scalar = forced && std::strcmp(forced, "scalar") == 0;
#if defined(__x86_64__) || defined(_M_X64)
    if (!force_scalar && cpu_has_avx2())
        return {avx2::axpy_neg, avx2::scale, avx2::find_first_below, avx2::argmin_below, "avx2"};
#elif defined(__aarch64__)
    if (!force_scalar)
        return {neon::axpy_neg, neon::scale, neon::find_first_below, neon::argmin_below, "neon"};
#endif
    (void)force_scalar;
    return {scalar::axpy_neg, scalar::scale, scalar::find_first_below, scalar::argmin_below,
            "scalar"};
}

const Backend& backend() {
    static const Backend b = pick_backend();
    return b;
}

}  // namespace

void axpy_neg(double* dst, const double* src, double m, std::size_t n) {
    backend().axpy_neg(dst, src, m, n);
}

void scale(double* dst, double s, std::size_t n) { backend().scale(dst, s, n); }

std::size_t find_first_below(const double* v, std::size_t n, double bound) {
    return backend().find_first_below(v, n, bound);
}

std::size_t argmin_below(const double* v, std::size_t n, double bound) {
    return backend().argmin_below(v, n, bound);
}

const char* active_backend() { return backend().name; }

}  // namespace dicut::kernels

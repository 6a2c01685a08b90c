// AVX2/FMA variants. Compiled with -mavx2 -mfma for this translation unit
// only; callers must gate on cpu_has_avx2(). fnmadd rounds once, matching the
// std::fma reference bit for bit.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "dicut/kernels.hpp"

namespace dicut::kernels::avx2 {

void axpy_neg(double* dst, const double* src, double m, std::size_t n) {
    const __m256d mv = _mm256_set1_pd(m);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256d d0 = _mm256_loadu_pd(dst + i);
        __m256d d1 = _mm256_loadu_pd(dst + i + 4);
        __m256d d2 = _mm256_loadu_pd(dst + i + 8);
        __m256d d3 = _mm256_loadu_pd(dst + i + 12);
        d0 = _mm256_fnmadd_pd(mv, _mm256_loadu_pd(src + i), d0);
        d1 = _mm256_fnmadd_pd(mv, _mm256_loadu_pd(src + i + 4), d1);
        d2 = _mm256_fnmadd_pd(mv, _mm256_loadu_pd(src + i + 8), d2);
        d3 = _mm256_fnmadd_pd(mv, _mm256_loadu_pd(src + i + 12), d3);
        _mm256_storeu_pd(dst + i, d0);
        _mm256_storeu_pd(dst + i + 4, d1);
        _mm256_storeu_pd(dst + i + 8, d2);
        _mm256_storeu_pd(dst + i + 12, d3);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_loadu_pd(dst + i);
        d = _mm256_fnmadd_pd(mv, _mm256_loadu_pd(src + i), d);
        _mm256_storeu_pd(dst + i, d);
    }
    for (; i < n; ++i) dst[i] = std::fma(-m, src[i], dst[i]);
}

void scale(double* dst, double s, std::size_t n) {
    const __m256d sv = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(dst + i), sv));
    for (; i < n; ++i) dst[i] *= s;
}

std::size_t find_first_below(const double* v, std::size_t n, double bound) {
    const __m256d bv = _mm256_set1_pd(bound);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(v + i);
        int mask = _mm256_movemask_pd(_mm256_cmp_pd(x, bv, _CMP_LT_OQ));
        if (mask) return i + static_cast<std::size_t>(__builtin_ctz(mask));
    }
    for (; i < n; ++i)
        if (v[i] < bound) return i;
    return npos;
}

std::size_t argmin_below(const double* v, std::size_t n, double bound) {
    // Pass 1: global minimum; pass 2: its first occurrence. This keeps the
    // lowest-index tie break of the scalar reference.
    if (n == 0) return npos;
    std::size_t i = 0;
    __m256d mins = _mm256_set1_pd(bound);
    for (; i + 4 <= n; i += 4) mins = _mm256_min_pd(mins, _mm256_loadu_pd(v + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, mins);
    double m = lanes[0];
    for (int k = 1; k < 4; ++k)
        if (lanes[k] < m) m = lanes[k];
    for (; i < n; ++i)
        if (v[i] < m) m = v[i];
    if (!(m < bound)) return npos;
    const __m256d mv = _mm256_set1_pd(m);
    for (i = 0; i + 4 <= n; i += 4) {
        int mask = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(v + i), mv, _CMP_EQ_OQ));
        if (mask) return i + static_cast<std::size_t>(__builtin_ctz(mask));
    }
    for (; i < n; ++i)
        if (v[i] == m) return i;
    return npos;  // unreachable for NaN-free input
}

}  // namespace dicut::kernels::avx2

#endif

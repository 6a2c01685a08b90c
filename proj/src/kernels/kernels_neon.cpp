// NEON variants for aarch64. vfmaq_f64 rounds once, matching the std::fma
// reference bit for bit.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

#include "dicut/kernels.hpp"

namespace dicut::kernels::neon {

void axpy_neg(double* dst, const double* src, double m, std::size_t n) {
    const float64x2_t mv = vdupq_n_f64(-m);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vld1q_f64(dst + i);
        d = vfmaq_f64(d, mv, vld1q_f64(src + i));
        vst1q_f64(dst + i, d);
    }
    for (; i < n; ++i) dst[i] = std::fma(-m, src[i], dst[i]);
}

void scale(double* dst, double s, std::size_t n) {
    const float64x2_t sv = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vmulq_f64(vld1q_f64(dst + i), sv));
    for (; i < n; ++i) dst[i] *= s;
}

std::size_t find_first_below(const double* v, std::size_t n, double bound) {
    const float64x2_t bv = vdupq_n_f64(bound);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t lt = vcltq_f64(vld1q_f64(v + i), bv);
        if (vgetq_lane_u64(lt, 0)) return i;
        if (vgetq_lane_u64(lt, 1)) return i + 1;
    }
    for (; i < n; ++i)
        if (v[i] < bound) return i;
    return npos;
}

std::size_t argmin_below(const double* v, std::size_t n, double bound) {
    if (n == 0) return npos;
    std::size_t i = 0;
    float64x2_t mins = vdupq_n_f64(bound);
    for (; i + 2 <= n; i += 2) mins = vminq_f64(mins, vld1q_f64(v + i));
    double m = vgetq_lane_f64(mins, 0);
    double m1 = vgetq_lane_f64(mins, 1);
    if (m1 < m) m = m1;
    for (; i < n; ++i)
        if (v[i] < m) m = v[i];
    if (!(m < bound)) return npos;
    for (i = 0; i < n; ++i)
        if (v[i] == m) return i;
    return npos;
}

}  // namespace dicut::kernels::neon

#endif

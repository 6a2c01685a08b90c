#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "dicut/kernels.hpp"
#include "dicut/rng.hpp"

using namespace dicut;
namespace k = dicut::kernels;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n, double lo = -4.0, double hi = 4.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = lo + (hi - lo) * rng.next_unit();
    return v;
}

}  // namespace

TEST_CASE("scalar kernels match a plain loop") {
    Rng rng(7);
    auto dst = random_vec(rng, 37);
    auto src = random_vec(rng, 37);
    auto expect = dst;
    double m = 1.75;
    for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = std::fma(-m, src[i], expect[i]);
    k::scalar::axpy_neg(dst.data(), src.data(), m, dst.size());
    CHECK(dst == expect);

    k::scalar::scale(dst.data(), 0.5, dst.size());
    for (auto& x : expect) x *= 0.5;
    CHECK(dst == expect);
}

TEST_CASE("scan kernels: first-below and argmin semantics") {
    std::vector<double> v = {3.0, -1.0, -5.0, -5.0, 2.0};
    CHECK(k::scalar::find_first_below(v.data(), v.size(), 0.0) == 1);
    CHECK(k::scalar::find_first_below(v.data(), v.size(), -10.0) == k::npos);
    // lowest index wins the tie at -5
    CHECK(k::scalar::argmin_below(v.data(), v.size(), 0.0) == 2);
    CHECK(k::scalar::argmin_below(v.data(), v.size(), -6.0) == k::npos);
    CHECK(k::scalar::argmin_below(v.data(), 0, 0.0) == k::npos);
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 variants agree with the scalar reference bit for bit") {
    if (!k::cpu_has_avx2()) return;
    Rng rng(11);
    for (std::size_t n : {std::size_t(1), std::size_t(3), std::size_t(16), std::size_t(33),
                          std::size_t(257), std::size_t(4096)}) {
        auto a = random_vec(rng, n);
        auto b = random_vec(rng, n);
        double m = -2.5 + 5 * rng.next_unit();

        auto a_ref = a;
        k::scalar::axpy_neg(a_ref.data(), b.data(), m, n);
        auto a_simd = a;
        k::avx2::axpy_neg(a_simd.data(), b.data(), m, n);
        CHECK(std::memcmp(a_ref.data(), a_simd.data(), n * sizeof(double)) == 0);

        auto s_ref = a;
        k::scalar::scale(s_ref.data(), m, n);
        auto s_simd = a;
        k::avx2::scale(s_simd.data(), m, n);
        CHECK(std::memcmp(s_ref.data(), s_simd.data(), n * sizeof(double)) == 0);

        for (double bound : {0.0, 0.5, -3.9}) {
            CHECK(k::scalar::find_first_below(a.data(), n, bound) ==
                  k::avx2::find_first_below(a.data(), n, bound));
            CHECK(k::scalar::argmin_below(a.data(), n, bound) ==
                  k::avx2::argmin_below(a.data(), n, bound));
        }
    }
}

TEST_CASE("avx2 scans handle duplicated minima like the reference") {
    if (!k::cpu_has_avx2()) return;
    std::vector<double> v(64, 1.0);
    v[9] = -2.0;
    v[10] = -2.0;
    v[40] = -2.0;
    CHECK(k::avx2::argmin_below(v.data(), v.size(), 0.0) == 9);
    CHECK(k::avx2::find_first_below(v.data(), v.size(), 0.0) == 9);
}
#endif

TEST_CASE("dispatch picks a backend and stays consistent") {
    const char* name = k::active_backend();
    CHECK(name != nullptr);
    std::vector<double> v = {1.0, -1.0};
    CHECK(k::find_first_below(v.data(), v.size(), 0.0) == 1);
}

#pragma once

#include <cstdint>
#include <random>

namespace dicut {

// Seeded generator for Monte-Carlo sampling and test corpora. The engine is
// mt19937_64 (bit-reproducible per the standard); doubles are derived by the
// 53-bit shift so results do not depend on libstdc++'s distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return gen_() % n; }

    bool next_bernoulli(double p) { return next_unit() < p; }

private:
    std::mt19937_64 gen_;
};

}  // namespace dicut

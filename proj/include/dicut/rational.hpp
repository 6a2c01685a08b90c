#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dicut {

// All weights, biases, probabilities and certificate values are exact
// rationals. GMP backs the arithmetic; this header adds the text forms the
// file formats use.
using Rat = mpq_class;
using Int = mpz_class;

// Accepts "p/q", an integer, or a plain decimal such as "0.125" or "-3.5".
// Throws parse_error on anything else.
Rat parse_rat(std::string_view text);

// Canonical text: "p/q" with gcd(p,q)=1 and q>0, or just "p" when q=1.
// parse_rat(rat_str(r)) == r bit-exactly.
std::string rat_str(const Rat& r);

// Decimal rendering for human-facing output, e.g. "0.398437500000".
std::string rat_decimal(const Rat& r, int digits = 12);

inline double rat_d(const Rat& r) { return r.get_d(); }

// mpq_class(n, d) does not canonicalize; this does.
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// FNV-1a, used for step-function fingerprints in certificates and ledgers.
std::uint64_t fnv1a64(std::string_view s);
std::string fingerprint_hex(std::string_view canonical_text);

}  // namespace dicut

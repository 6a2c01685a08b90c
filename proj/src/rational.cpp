#include "dicut/rational.hpp"

#include <cctype>
#include <cstdio>

#include "dicut/errors.hpp"

namespace dicut {

Rat parse_rat(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw parse_error("empty number");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.' || c == '-' ||
              c == '+'))
            throw parse_error("bad character in number '" + s + "'");
    }
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos && dot != std::string::npos)
        throw parse_error("number mixes '/' and '.': '" + s + "'");
    try {
        if (slash != std::string::npos) {
            Rat r(s, 10);
            if (r.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
            r.canonicalize();
            return r;
        }
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            std::size_t frac_len = s.size() - dot - 1;
            if (frac_len == 0 || digits.empty() || digits == "-" || digits == "+")
                throw parse_error("bad decimal '" + s + "'");
            Rat r(Int(digits, 10), Int(1));
            for (std::size_t i = 0; i < frac_len; ++i) r /= 10;
            r.canonicalize();
            return r;
        }
        return Rat(Int(s, 10), Int(1));
    } catch (const std::invalid_argument&) {
        throw parse_error("unparsable number '" + s + "'");
    }
}

std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

std::string rat_decimal(const Rat& r, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, r.get_d());
    return buf;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fingerprint_hex(std::string_view canonical_text) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_text)));
    return buf;
}

}  // namespace dicut

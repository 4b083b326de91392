#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vlab {

// 128-bit integers with overflow detection. Coefficient arithmetic (tau
// tables, symmetric-square identities) must stay exact; anything that would
// wrap throws instead.
using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("int128 addition overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("int128 multiplication overflow");
    return r;
}

inline int128 checked_pow(int128 base, unsigned exp) {
    int128 r = 1;
    while (exp) {
        if (exp & 1u) r = checked_mul(r, base);
        exp >>= 1u;
        if (exp) base = checked_mul(base, base);
    }
    return r;
}

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // -2^127 negates fine through unsigned.
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

inline int128 parse_int128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
    if (i == s.size()) throw std::invalid_argument("bare sign is not an integer");
    int128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad digit in integer literal: " + s);
        v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
}

} // namespace vlab

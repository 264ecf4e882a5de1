#pragma once

#include <cstdint>
#include <stdexcept>

// GF(2^8) with the AES reduction polynomial x^8 + x^4 + x^3 + x + 1.
namespace tokenlab::gf256 {

inline std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }

inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t p = 0;
    while (b) {
        if (b & 1) p ^= a;
        const bool carry = (a & 0x80) != 0;
        a <<= 1;
        if (carry) a ^= 0x1b;
        b >>= 1;
    }
    return p;
}

inline std::uint8_t pow(std::uint8_t a, unsigned e) {
    std::uint8_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint8_t inv(std::uint8_t a) {
    if (a == 0) throw std::invalid_argument("gf256::inv: zero has no inverse");
    return pow(a, 254);  // a^(2^8 - 2)
}

}  // namespace tokenlab::gf256

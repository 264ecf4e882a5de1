#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tokenlab/gf2.hpp"
#include "tokenlab/prg.hpp"

namespace tokenlab::shamir {

// Number of bits a share occupies: the lambda-bit secret is padded to
// whole bytes and shared byte-wise over GF(2^8), so shares are
// 8*ceil(lambda/8) bits wide (= lambda whenever lambda is a multiple
// of 8).
inline std::size_t share_bits(unsigned lambda) { return 8 * ((lambda + 7) / 8); }

inline void check_lambda(unsigned lambda) {
    if (lambda < 4 || lambda > 255 || lambda % 2 != 0)
        throw std::invalid_argument("shamir: lambda must be even and in [4, 255]");
}

// (lambda, lambda/2 + 1) sharing of a lambda-bit secret: every byte of
// the padded secret is the constant term of an independent polynomial
// of degree <= lambda/2, and share n is the byte-wise evaluation at the
// field point x = n.
struct ShamirSharing {
    unsigned lambda = 0;
    std::vector<gf2::BitVector> shares;  // lambda entries of share_bits(lambda) bits

    std::uint8_t eval_point(std::size_t share_index) const {  // x_n = n, 1-based
        return static_cast<std::uint8_t>(share_index + 1);
    }
};

// Coefficients are indexed coeffs[byte][degree], degree 0 first; the
// degree-0 coefficient is the secret byte.
using PolyCoeffs = std::vector<std::vector<std::uint8_t>>;

ShamirSharing share_from_polys(const PolyCoeffs& coeffs, unsigned lambda);

ShamirSharing share(const gf2::BitVector& secret, unsigned lambda, Prg& rng);

// Lagrange interpolation per byte over >= lambda/2 + 1 points
// (x_n in 1..lambda, share value). With more points than the threshold
// every extra point is checked against the interpolated polynomial;
// nullopt means the shares do not agree on a unique secret.
std::optional<gf2::BitVector> reconstruct(
    const std::vector<std::pair<std::uint8_t, gf2::BitVector>>& points, unsigned lambda);

// Exhaustive census of the polynomials of degree <= lambda/2 consistent
// with the opened points; counts[byte][s] is the number of consistent
// polynomials whose constant term for that byte equals s. Refuses when
// the enumeration would be infeasible (lambda > 8 or too many free
// coefficients).
std::vector<std::array<std::uint64_t, 256>> hiding_enumeration(
    const std::vector<std::pair<std::uint8_t, gf2::BitVector>>& opened, unsigned lambda);

}  // namespace tokenlab::shamir

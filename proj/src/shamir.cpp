#include "tokenlab/shamir.hpp"

#include <algorithm>
#include <stdexcept>

#include "tokenlab/gf256.hpp"

namespace tokenlab::shamir {

namespace {

using MulTable = std::array<std::array<std::uint8_t, 256>, 256>;

const MulTable& mul_table() {
    static const MulTable table = [] {
        MulTable t{};
        for (unsigned a = 0; a < 256; ++a)
            for (unsigned b = 0; b < 256; ++b)
                t[a][b] = gf256::mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
        return t;
    }();
    return table;
}

std::uint8_t eval_poly(const std::vector<std::uint8_t>& coeffs, std::uint8_t x) {
    const MulTable& mt = mul_table();
    std::uint8_t acc = 0;
    for (std::size_t d = coeffs.size(); d-- > 0;) acc = static_cast<std::uint8_t>(mt[acc][x] ^ coeffs[d]);
    return acc;
}

std::size_t secret_bytes(unsigned lambda) { return (lambda + 7) / 8; }

void check_points(const std::vector<std::pair<std::uint8_t, gf2::BitVector>>& points,
                  unsigned lambda) {
    std::vector<bool> seen(lambda + 1, false);
    for (const auto& [x, share] : points) {
        if (x == 0 || x > lambda) throw std::invalid_argument("shamir: evaluation point out of range");
        if (seen[x]) throw std::invalid_argument("shamir: duplicate evaluation point");
        seen[x] = true;
        if (share.size() != share_bits(lambda))
            throw std::invalid_argument("shamir: share has wrong width");
    }
}

// Lagrange evaluation at `at` of the unique degree <= n-1 polynomial
// through the given (x, y) points, one secret byte at a time.
std::uint8_t lagrange_at(const std::vector<std::uint8_t>& xs, const std::vector<std::uint8_t>& ys,
                         std::uint8_t at) {
    const MulTable& mt = mul_table();
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::uint8_t num = 1, den = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            num = mt[num][at ^ xs[j]];
            den = mt[den][xs[i] ^ xs[j]];
        }
        acc ^= mt[ys[i]][mt[num][gf256::inv(den)]];
    }
    return acc;
}

}  // namespace

ShamirSharing share_from_polys(const PolyCoeffs& coeffs, unsigned lambda) {
    check_lambda(lambda);
    const std::size_t nbytes = secret_bytes(lambda);
    const std::size_t ncoeffs = lambda / 2 + 1;
    if (coeffs.size() != nbytes) throw std::invalid_argument("shamir: wrong byte count");
    for (const auto& c : coeffs)
        if (c.size() != ncoeffs) throw std::invalid_argument("shamir: wrong coefficient count");

    ShamirSharing sharing;
    sharing.lambda = lambda;
    sharing.shares.reserve(lambda);
    std::vector<std::uint8_t> buf(nbytes);
    for (unsigned n = 1; n <= lambda; ++n) {
        for (std::size_t b = 0; b < nbytes; ++b)
            buf[b] = eval_poly(coeffs[b], static_cast<std::uint8_t>(n));
        sharing.shares.push_back(gf2::BitVector::from_bytes(buf, share_bits(lambda)));
    }
    return sharing;
}

ShamirSharing share(const gf2::BitVector& secret, unsigned lambda, Prg& rng) {
    check_lambda(lambda);
    if (secret.size() != lambda) throw std::invalid_argument("shamir: secret must have lambda bits");
    const std::vector<std::uint8_t> padded = secret.to_bytes();
    PolyCoeffs coeffs(padded.size());
    // coefficient draw order: byte-major, then ascending degree
    for (std::size_t b = 0; b < padded.size(); ++b) {
        coeffs[b].resize(lambda / 2 + 1);
        coeffs[b][0] = padded[b];
        for (std::size_t d = 1; d <= lambda / 2; ++d) coeffs[b][d] = rng.next_byte();
    }
    return share_from_polys(coeffs, lambda);
}

std::optional<gf2::BitVector> reconstruct(
    const std::vector<std::pair<std::uint8_t, gf2::BitVector>>& points, unsigned lambda) {
    check_lambda(lambda);
    check_points(points, lambda);
    const std::size_t threshold = lambda / 2 + 1;
    if (points.size() < threshold) throw std::invalid_argument("shamir: insufficient shares");

    std::vector<std::pair<std::uint8_t, gf2::BitVector>> sorted = points;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const std::size_t nbytes = secret_bytes(lambda);
    std::vector<std::uint8_t> secret(nbytes);
    std::vector<std::vector<std::uint8_t>> share_bytes;
    share_bytes.reserve(sorted.size());
    for (const auto& p : sorted) share_bytes.push_back(p.second.to_bytes());

    for (std::size_t b = 0; b < nbytes; ++b) {
        std::vector<std::uint8_t> xs(threshold), ys(threshold);
        for (std::size_t i = 0; i < threshold; ++i) {
            xs[i] = sorted[i].first;
            ys[i] = share_bytes[i][b];
        }
        // every point beyond the interpolation set must lie on the same
        // degree <= lambda/2 polynomial, otherwise the secret is not
        // uniquely determined
        for (std::size_t i = threshold; i < sorted.size(); ++i)
            if (lagrange_at(xs, ys, sorted[i].first) != share_bytes[i][b]) return std::nullopt;
        secret[b] = lagrange_at(xs, ys, 0);
    }
    return gf2::BitVector::from_bytes(secret, lambda);
}

namespace {

// Solves the k x k system sum_j a_j * x_i^j = rhs_i (j = 1..k) over
// GF(2^8); the matrix is an invertible Vandermonde slice, so a unique
// solution always exists.
struct ChallengeSystem {
    std::size_t k;
    std::vector<std::uint8_t> inverse;  // k x k row-major inverse matrix

    explicit ChallengeSystem(const std::vector<std::uint8_t>& xs) : k(xs.size()), inverse(k * k) {
        const MulTable& mt = mul_table();
        std::vector<std::uint8_t> m(k * 2 * k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            std::uint8_t p = 1;
            for (std::size_t j = 0; j < k; ++j) {
                p = mt[p][xs[i]];
                m[i * 2 * k + j] = p;  // x_i^(j+1)
            }
            m[i * 2 * k + k + i] = 1;
        }
        // Gauss-Jordan over GF(256)
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            while (m[piv * 2 * k + col] == 0) ++piv;
            if (piv != col)
                for (std::size_t j = 0; j < 2 * k; ++j) std::swap(m[col * 2 * k + j], m[piv * 2 * k + j]);
            const std::uint8_t scale = gf256::inv(m[col * 2 * k + col]);
            for (std::size_t j = 0; j < 2 * k; ++j) m[col * 2 * k + j] = mt[m[col * 2 * k + j]][scale];
            for (std::size_t r = 0; r < k; ++r) {
                if (r == col || m[r * 2 * k + col] == 0) continue;
                const std::uint8_t f = m[r * 2 * k + col];
                for (std::size_t j = 0; j < 2 * k; ++j) m[r * 2 * k + j] ^= mt[f][m[col * 2 * k + j]];
            }
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) inverse[i * k + j] = m[i * 2 * k + k + j];
    }
};

}  // namespace

std::vector<std::array<std::uint64_t, 256>> hiding_enumeration(
    const std::vector<std::pair<std::uint8_t, gf2::BitVector>>& opened, unsigned lambda) {
    check_lambda(lambda);
    if (lambda > 8) throw std::invalid_argument("hiding_enumeration: lambda too large to enumerate");
    check_points(opened, lambda);

    const MulTable& mt = mul_table();
    const std::size_t nbytes = secret_bytes(lambda);
    const std::size_t degree = lambda / 2;
    const std::size_t k = opened.size();
    std::vector<std::array<std::uint64_t, 256>> counts(nbytes);
    for (auto& c : counts) c.fill(0);

    std::vector<std::uint8_t> xs(k);
    std::vector<std::vector<std::uint8_t>> ys(k);
    for (std::size_t i = 0; i < k; ++i) {
        xs[i] = opened[i].first;
        ys[i] = opened[i].second.to_bytes();
    }

    if (k >= degree + 1) {
        // at or above threshold the polynomial is pinned; a point mass if
        // the opened points are consistent, empty otherwise
        for (std::size_t b = 0; b < nbytes; ++b) {
            std::vector<std::uint8_t> bx(xs.begin(), xs.begin() + degree + 1);
            std::vector<std::uint8_t> by(degree + 1);
            for (std::size_t i = 0; i <= degree; ++i) by[i] = ys[i][b];
            bool ok = true;
            for (std::size_t i = degree + 1; i < k && ok; ++i)
                ok = lagrange_at(bx, by, xs[i]) == ys[i][b];
            if (ok) counts[b][lagrange_at(bx, by, 0)] = 1;
        }
        return counts;
    }

    const std::size_t free_high = degree - k;  // coefficients k+1 .. degree
    // full filter enumeration when the whole coefficient space fits,
    // otherwise walk the consistent set directly via the solved system
    const bool full_enum = degree + 1 <= 3;
    if (!full_enum && 1 + free_high > 3)
        throw std::invalid_argument("hiding_enumeration: too many free coefficients to enumerate");

    for (std::size_t b = 0; b < nbytes; ++b) {
        if (full_enum) {
            std::vector<std::uint8_t> coeffs(degree + 1, 0);
            const std::uint64_t total = std::uint64_t{1} << (8 * (degree + 1));
            for (std::uint64_t t = 0; t < total; ++t) {
                std::uint64_t v = t;
                for (std::size_t d = 0; d <= degree; ++d, v >>= 8)
                    coeffs[d] = static_cast<std::uint8_t>(v & 0xff);
                bool ok = true;
                for (std::size_t i = 0; i < k && ok; ++i)
                    ok = eval_poly(coeffs, xs[i]) == ys[i][b];
                if (ok) ++counts[b][coeffs[0]];
            }
            continue;
        }

        // Parametrize the consistent set by (a_0, a_{k+1}..a_degree): the
        // remaining coefficients a_1..a_k are pinned by an invertible
        // Vandermonde slice, so each parameter choice yields exactly one
        // candidate, which is then re-checked against the opened points.
        ChallengeSystem system(xs);
        std::vector<std::uint8_t> coeffs(degree + 1, 0);
        std::vector<std::uint8_t> rhs(k);
        const std::uint64_t high_total = std::uint64_t{1} << (8 * free_high);
        for (std::uint64_t hv = 0; hv < high_total; ++hv) {
            std::uint64_t v = hv;
            for (std::size_t d = 0; d < free_high; ++d, v >>= 8)
                coeffs[k + 1 + d] = static_cast<std::uint8_t>(v & 0xff);
            for (unsigned s = 0; s < 256; ++s) {
                coeffs[0] = static_cast<std::uint8_t>(s);
                for (std::size_t i = 0; i < k; ++i) {
                    std::uint8_t acc = static_cast<std::uint8_t>(ys[i][b] ^ coeffs[0]);
                    std::uint8_t p = 1;
                    for (std::size_t j = 1; j <= degree; ++j) {
                        p = mt[p][xs[i]];
                        if (j > k) acc ^= mt[coeffs[j]][p];
                    }
                    rhs[i] = acc;
                }
                for (std::size_t j = 0; j < k; ++j) {
                    std::uint8_t acc = 0;
                    for (std::size_t i = 0; i < k; ++i) acc ^= mt[system.inverse[j * k + i]][rhs[i]];
                    coeffs[1 + j] = acc;
                }
                bool ok = true;
                for (std::size_t i = 0; i < k && ok; ++i)
                    ok = eval_poly(coeffs, xs[i]) == ys[i][b];
                if (ok) ++counts[b][s];
            }
        }
    }
    return counts;
}

}  // namespace tokenlab::shamir

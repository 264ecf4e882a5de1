#pragma once

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace tokenlab {

// Deterministic counter-mode generator. Every stream is keyed by
// (seed, role) so that the Goliath, David and token-tape streams drawn
// from one session seed never interleave; a word is a pure function of
// (key, counter), which keeps rewinding experiments reproducible.
class Prg {
public:
    Prg(std::uint64_t seed, std::string_view role)
        : key_(mix64(seed ^ (0x9e3779b97f4a7c15ULL * (fnv1a(role) | 1)))) {}

    std::uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    std::uint8_t next_byte() { return static_cast<std::uint8_t>(next_u64() & 0xff); }

    bool next_bit() { return (next_u64() & 1) != 0; }

    // Uniform in [0, n) via rejection sampling.
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Prg::next_below: empty range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    void fill(std::uint8_t* out, std::size_t n) {
        std::size_t i = 0;
        while (i + 8 <= n) {
            std::uint64_t w = next_u64();
            for (int b = 0; b < 8; ++b) out[i++] = static_cast<std::uint8_t>(w >> (8 * b));
        }
        if (i < n) {
            std::uint64_t w = next_u64();
            for (; i < n; ++i, w >>= 8) out[i] = static_cast<std::uint8_t>(w & 0xff);
        }
    }

    std::vector<std::uint8_t> bytes(std::size_t n) {
        std::vector<std::uint8_t> out(n);
        fill(out.data(), n);
        return out;
    }

    // Sorted k-subset of {0, ..., universe-1} (partial Fisher-Yates).
    std::vector<std::uint32_t> subset(std::uint32_t universe, std::uint32_t k);

    // Stable per-trial subseed derivation so parallel shards agree with a
    // sequential run.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        return mix64(mix64(seed + 0x9e3779b97f4a7c15ULL) ^ mix64(index + 0xbf58476d1ce4e5b9ULL));
    }

private:
    static std::uint64_t mix64(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

inline std::vector<std::uint32_t> Prg::subset(std::uint32_t universe, std::uint32_t k) {
    if (k > universe) throw std::invalid_argument("Prg::subset: k exceeds universe");
    std::vector<std::uint32_t> pool(universe);
    for (std::uint32_t i = 0; i < universe; ++i) pool[i] = i;
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t j = i + static_cast<std::uint32_t>(next_below(universe - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::uint32_t> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tokenlab

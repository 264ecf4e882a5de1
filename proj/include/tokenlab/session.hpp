#pragma once

#include <cstdint>

#include "tokenlab/gf2.hpp"
#include "tokenlab/outcome.hpp"
#include "tokenlab/transcript.hpp"

namespace tokenlab {

// Inputs of one OTM/OT session: Goliath's strings and David's choice
// bit. All per-session randomness is derived from `seed`.
struct OtmInputs {
    unsigned lambda = 0;
    std::uint64_t seed = 0;
    gf2::BitVector s0, s1;
    bool c = false;
};

struct SessionResult {
    Outcome outcome;
    SessionTranscript transcript;
};

inline void validate_lambda(unsigned lambda) {
    if (lambda < 4 || lambda % 2 != 0)
        throw std::invalid_argument("lambda must be even and at least 4");
}

inline void validate_otm_inputs(const OtmInputs& in) {
    validate_lambda(in.lambda);
    if (in.s0.size() != in.lambda || in.s1.size() != in.lambda)
        throw std::invalid_argument("inputs must be lambda-bit strings");
}

}  // namespace tokenlab

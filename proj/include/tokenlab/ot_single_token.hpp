#pragma once

#include <functional>

#include "tokenlab/otm_two_token.hpp"
#include "tokenlab/session.hpp"

// Unconditionally secure OT from a single token: the token plays the
// inputs role of the two-token protocol and the affine-map query is an
// interactive exchange with Goliath instead. Goliath's inputs are fixed
// before the token ships, which is what makes this OT rather than OTM.
namespace tokenlab::ot1 {

struct Options {
    // Replaces Goliath's honest answer to the query vector z; receives
    // (setup, z) and returns the reply message. Used by cheating-Goliath
    // experiments.
    std::function<Message(const otm2::GoliathSetup&, const gf2::BitVector&)> goliath_answer;
    // Replaces the honest inputs token (e.g. with a relaying variant).
    std::function<std::unique_ptr<TokenProgram>(const otm2::GoliathSetup&)> inputs_token_factory;
    ChannelMode mode = ChannelMode::Incoming;
    // Observes the wrapper after each David->token exchange; outgoing-
    // channel experiments drain the relay mail here.
    std::function<void(TokenWrapper&)> goliath_tap;
};

struct SessionOutput {
    Outcome outcome;
    SessionTranscript transcript;
    gf2::BitVector z;  // the query vector David sent to Goliath
};

SessionOutput run_session(const OtmInputs& in, const Options& opts = {});

// Standard derandomization of a random OT: David sends e = c xor d,
// Goliath replies (x0, x1) = (s0 + r_e, s1 + r_{1-e}), David unmasks
// with r_d.
struct RandomOtTuple {
    gf2::BitVector r0, r1;  // Goliath's random strings
    bool d = false;         // David's random choice
    gf2::BitVector rd;      // the string David holds, r_d
};

gf2::BitVector derandomize(const RandomOtTuple& rot, const gf2::BitVector& s0,
                           const gf2::BitVector& s1, bool c);

// Random-inputs OT via the token followed by derandomization; returns
// the same outcome an ideal OT would give for (s0, s1, c).
SessionResult run_derandomized_session(const OtmInputs& in);

}  // namespace tokenlab::ot1

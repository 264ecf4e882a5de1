#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "tokenlab/prg.hpp"
#include "tokenlab/session.hpp"
#include "tokenlab/token_runtime.hpp"

// Unconditionally secure OTM-with-abort from two tokens in the
// incoming-channel model. The inputs token commits to a random affine
// map and hands out one-time-pad ciphertexts of Goliath's strings; the
// random token evaluates the map once, which releases exactly one pad.
namespace tokenlab::otm2 {

// Hardwired one-shot evaluation V = a (x) z + B of the random affine map.
class RandomToken : public CloneableToken<RandomToken> {
public:
    RandomToken(gf2::BitVector a, gf2::BitMatrix b);
    StepOutput step(const Message& input) override;

private:
    gf2::BitVector a_;
    gf2::BitMatrix b_;
    bool dead_ = false;
};

// Commits to David's masked view of (a, B), then releases the padded
// inputs; two activations total.
class InputsToken : public CloneableToken<InputsToken> {
public:
    InputsToken(gf2::BitVector s0, gf2::BitVector s1, gf2::BitVector a, gf2::BitMatrix b);
    StepOutput step(const Message& input) override;

private:
    enum class St { Ready, Committed, Dead };
    gf2::BitVector s0_, s1_, a_;
    gf2::BitMatrix b_, g_;
    St state_ = St::Ready;
};

struct GoliathSetup {
    unsigned lambda = 0;
    gf2::BitVector a;   // 2*lambda bits
    gf2::BitMatrix b;   // 2*lambda x 2*lambda
    gf2::BitVector s0, s1;

    static GoliathSetup sample(unsigned lambda, gf2::BitVector s0, gf2::BitVector s1, Prg& rng);

    std::unique_ptr<TokenProgram> make_random_token() const;
    std::unique_ptr<TokenProgram> make_inputs_token() const;
};

// Everything David stores once the OTM counts as delivered; from here
// on only the random token is ever contacted.
struct DeliveredState {
    unsigned lambda = 0;
    gf2::BitMatrix c;        // David's secret lambda x 2*lambda matrix
    gf2::BitMatrix g;        // as received
    gf2::BitVector a_tilde;  // C*a
    gf2::BitMatrix b_tilde;  // C*B
    gf2::BitVector h;        // David's secret nonzero vector
    gf2::BitVector st0, st1;
};

Message choice_message(const gf2::BitVector& z);
Message matrix_message(const gf2::BitMatrix& c);
Message vector_message(const gf2::BitVector& h);

struct DeliverResult {
    std::optional<DeliveredState> state;
    AbortCause cause = AbortCause::None;
};

// Deliver phase of Fig. 5: send C, then h, to the inputs token and keep
// its answers. Shape violations in the answers abort.
DeliverResult david_deliver(TokenWrapper& inputs_token, unsigned lambda, Prg& rng);

// Choice phase of Fig. 5 against the random token: sample z with
// dot(z, h) = c, verify C*V = a_tilde*z^T + B_tilde, and unmask.
// `z_out`, when set, receives the query vector (used by experiments).
Outcome david_choice(TokenWrapper& random_token, const DeliveredState& d, bool c, Prg& rng,
                     gf2::BitVector* z_out = nullptr);

// Same acceptance check and output rule on an externally supplied
// answer; shared with the single-token OT where Goliath answers.
Outcome david_choice_check(const DeliveredState& d, bool c, const gf2::BitVector& z,
                           const Message& reply);

struct Options {
    // Replaces the honest random token, e.g. with a toggle-aware or
    // tampering variant programmed by a malicious Goliath.
    std::function<std::unique_ptr<TokenProgram>(const GoliathSetup&)> random_token_factory;
    // Script of incoming-channel deliveries to the random token between
    // the deliver and choice phases.
    std::vector<Message> incoming_before_choice;
};

SessionResult run_session(const OtmInputs& in, const Options& opts = {});

}  // namespace tokenlab::otm2

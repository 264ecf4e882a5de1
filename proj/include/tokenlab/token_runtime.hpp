#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tokenlab/message.hpp"
#include "tokenlab/transcript.hpp"

namespace tokenlab {

struct StateError : std::logic_error {
    explicit StateError(const std::string& what) : std::logic_error(what) {}
};

struct ChannelError : std::logic_error {
    explicit ChannelError(const std::string& what) : std::logic_error(what) {}
};

// Payloads a token hands to the harness-mediated oblivious-transfer
// exchange; the receiving party sees exactly one of them and the token
// never learns which.
struct OtOffer {
    Bytes x0, x1;
};

// One activation's result.
struct StepOutput {
    Message reply;
    std::vector<Message> outgoing;     // one-way channel to the creator
    std::optional<OtOffer> ot_offer;   // only set by the choice phase of the
                                       // computational tokens

    static StepOutput of(Message m) { return {std::move(m), {}, std::nullopt}; }
    static StepOutput abort(const std::string& cause) {
        ByteWriter w;
        w.blob(Bytes(cause.begin(), cause.end()));
        return {Message("abort", w.take()), {}, std::nullopt};
    }
};

inline bool is_abort(const Message& m) { return m.tag == "abort"; }

inline std::string abort_reason(const Message& m) {
    ByteReader r(m.body);
    const Bytes b = r.blob();
    return std::string(b.begin(), b.end());
}

// A token is a deterministic step function over cloneable state.
// Determinism is what makes snapshot/restore equivalent to resetting a
// physical copy: identical (state, message) pairs must yield identical
// results.
class TokenProgram {
public:
    virtual ~TokenProgram() = default;
    virtual std::unique_ptr<TokenProgram> clone() const = 0;
    virtual StepOutput step(const Message& input) = 0;
};

template <typename Derived>
class CloneableToken : public TokenProgram {
public:
    std::unique_ptr<TokenProgram> clone() const override {
        return std::make_unique<Derived>(static_cast<const Derived&>(*this));
    }
};

class TokenWrapper;

// Immutable saved token state; restoring from the same snapshot any
// number of times replays identically. Available to extraction and
// attack experiments only, never to honest protocol roles.
class Snapshot {
public:
    Snapshot() = default;

private:
    friend class TokenWrapper;
    std::shared_ptr<const TokenProgram> program_;
    int phase_ = 0;
    std::uint64_t activations_ = 0;
};

// Hosts one token behind the declared channel mode: David may execute
// it, the creator may reach it only through the one-way channel the
// mode allows. Phases follow wait -> sent (create) -> ready (deliver).
class TokenWrapper {
public:
    enum class Phase { Wait, Sent, Ready };

    struct Limits {
        std::uint64_t max_activations = 1u << 20;
        std::size_t max_message_bytes = 1u << 20;
    };

    explicit TokenWrapper(ChannelMode mode, SessionTranscript* transcript = nullptr,
                          Limits limits = {})
        : mode_(mode), transcript_(transcript), limits_(limits) {}

    Phase phase() const { return phase_; }
    ChannelMode mode() const { return mode_; }

    void create(std::unique_ptr<TokenProgram> program);
    void deliver();

    // David's execution interface. Aborts (budget, token-declared) come
    // back as "abort" replies; wrong-phase use is a state error.
    struct ExecuteResult {
        Message reply;
        std::optional<OtOffer> ot_offer;
    };
    ExecuteResult execute(const Message& input);

    // One-way channel from the creator into the token; the token's reply
    // never surfaces.
    void incoming_deliver(const Message& m);

    // One-way channel from the token to the creator; returns and clears
    // the captured messages in order.
    std::vector<Message> drain_outgoing();

    Snapshot snapshot() const;
    void restore(const Snapshot& s);

    // Count of one-way-channel uses, for isolation assertions.
    std::uint64_t channel_uses() const { return channel_uses_; }

private:
    StepOutput run_program(const Message& input);

    ChannelMode mode_;
    SessionTranscript* transcript_;
    Limits limits_;
    Phase phase_ = Phase::Wait;
    std::unique_ptr<TokenProgram> program_;
    std::vector<Message> outbox_;
    std::uint64_t activations_ = 0;
    std::uint64_t channel_uses_ = 0;
};

}  // namespace tokenlab

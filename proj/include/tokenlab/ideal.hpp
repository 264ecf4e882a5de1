#pragma once

#include <optional>

#include "tokenlab/gf2.hpp"
#include "tokenlab/token_runtime.hpp"

namespace tokenlab::ideal {

// One-Time Memory: the creator stores (s0, s1), the receiver learns
// exactly one of them, once. Any out-of-phase message aborts the
// functionality for good.
class Otm {
public:
    enum class State { Wait, Sent, Ready, Dead };

    explicit Otm(unsigned lambda) : lambda_(lambda) {}

    bool create(const gf2::BitVector& s0, const gf2::BitVector& s1);
    bool deliver();
    std::optional<gf2::BitVector> choice(bool c);

    State state() const { return state_; }
    bool aborted() const { return aborted_; }

protected:
    bool abort() {
        aborted_ = true;
        state_ = State::Dead;
        return false;
    }

    unsigned lambda_;
    State state_ = State::Wait;
    bool aborted_ = false;
    gf2::BitVector s0_, s1_;
};

// One-Time Memory with abort: after delivery the adversary may only
// toggle availability, never the stored values. While switched off any
// message except switch-on aborts.
class OtmWithAbort {
public:
    using State = Otm::State;

    explicit OtmWithAbort(unsigned lambda) : lambda_(lambda) {}

    bool create(const gf2::BitVector& s0, const gf2::BitVector& s1);
    bool overwrite(const gf2::BitVector& s0, const gf2::BitVector& s1);  // adversary, pre-deliver
    bool deliver();
    std::optional<gf2::BitVector> choice(bool c);
    bool switch_off();
    bool switch_on();

    State state() const { return state_; }
    bool aborted() const { return aborted_; }
    bool available() const { return available_; }

private:
    bool abort() {
        aborted_ = true;
        state_ = State::Dead;
        return false;
    }
    // "if any message other than switch on is received while off, the
    // functionality aborts"
    bool gate() {
        if (available_) return true;
        abort();
        return false;
    }

    unsigned lambda_;
    State state_ = State::Wait;
    bool aborted_ = false;
    bool available_ = true;
    gf2::BitVector s0_, s1_;
};

// Commitment: one commit, one open, the opened value is the committed
// one. Misuse is a caller bug, not an adversarial outcome.
class Com {
public:
    void commit(const gf2::BitVector& m);
    gf2::BitVector open();

private:
    enum class State { Wait, Committed, Opened };
    State state_ = State::Wait;
    gf2::BitVector m_;
};

}  // namespace tokenlab::ideal

#include "tokenlab/ideal.hpp"

namespace tokenlab::ideal {

bool Otm::create(const gf2::BitVector& s0, const gf2::BitVector& s1) {
    if (aborted_) return false;
    if (state_ != State::Wait || s0.size() != lambda_ || s1.size() != lambda_) return abort();
    s0_ = s0;
    s1_ = s1;
    state_ = State::Sent;
    return true;
}

bool Otm::deliver() {
    if (aborted_) return false;
    if (state_ != State::Sent) return abort();
    state_ = State::Ready;
    return true;
}

std::optional<gf2::BitVector> Otm::choice(bool c) {
    if (aborted_ || state_ != State::Ready) {
        abort();
        return std::nullopt;
    }
    state_ = State::Dead;
    return c ? s1_ : s0_;
}

bool OtmWithAbort::create(const gf2::BitVector& s0, const gf2::BitVector& s1) {
    if (aborted_ || !gate()) return false;
    if (state_ != State::Wait || s0.size() != lambda_ || s1.size() != lambda_) return abort();
    s0_ = s0;
    s1_ = s1;
    state_ = State::Sent;
    return true;
}

bool OtmWithAbort::overwrite(const gf2::BitVector& s0, const gf2::BitVector& s1) {
    if (aborted_ || !gate()) return false;
    if (state_ != State::Sent || s0.size() != lambda_ || s1.size() != lambda_) return abort();
    s0_ = s0;
    s1_ = s1;
    return true;
}

bool OtmWithAbort::deliver() {
    if (aborted_ || !gate()) return false;
    if (state_ != State::Sent) return abort();
    state_ = State::Ready;
    return true;
}

std::optional<gf2::BitVector> OtmWithAbort::choice(bool c) {
    if (aborted_ || !gate() || state_ != State::Ready) {
        abort();
        return std::nullopt;
    }
    state_ = State::Dead;
    return c ? s1_ : s0_;
}

bool OtmWithAbort::switch_off() {
    if (aborted_ || !gate()) return false;
    available_ = false;
    return true;
}

bool OtmWithAbort::switch_on() {
    if (aborted_) return false;
    available_ = true;
    return true;
}

void Com::commit(const gf2::BitVector& m) {
    if (state_ != State::Wait) throw StateError("com: already committed");
    m_ = m;
    state_ = State::Committed;
}

gf2::BitVector Com::open() {
    if (state_ != State::Committed) throw StateError("com: nothing to open");
    state_ = State::Opened;
    return m_;
}

}  // namespace tokenlab::ideal

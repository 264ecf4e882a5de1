#include "tokenlab/otm_two_token.hpp"

namespace tokenlab::otm2 {

RandomToken::RandomToken(gf2::BitVector a, gf2::BitMatrix b) : a_(std::move(a)), b_(std::move(b)) {}

StepOutput RandomToken::step(const Message& input) {
    if (dead_) return StepOutput::abort("state");
    dead_ = true;
    if (input.tag != "choice") return StepOutput::abort("bad-shape");
    try {
        ByteReader r(input.body);
        const gf2::BitVector z = r.bitvec();
        r.expect_done();
        if (z.size() != a_.size()) return StepOutput::abort("bad-shape");
        ByteWriter w;
        w.bitmat(outer(a_, z) + b_);
        return StepOutput::of(Message("matrix", w.take()));
    } catch (const std::invalid_argument&) {
        return StepOutput::abort("bad-shape");
    }
}

InputsToken::InputsToken(gf2::BitVector s0, gf2::BitVector s1, gf2::BitVector a, gf2::BitMatrix b)
    : s0_(std::move(s0)), s1_(std::move(s1)), a_(std::move(a)), b_(std::move(b)) {}

StepOutput InputsToken::step(const Message& input) {
    try {
        if (input.tag == "matrix") {
            if (state_ != St::Ready) {
                state_ = St::Dead;
                return StepOutput::abort("state");
            }
            ByteReader r(input.body);
            const gf2::BitMatrix c = r.bitmat();
            r.expect_done();
            const std::size_t lambda = a_.size() / 2;
            if (c.rows() != lambda || c.cols() != a_.size()) {
                state_ = St::Dead;
                return StepOutput::abort("bad-shape");
            }
            g_ = kernel_complement(c);
            state_ = St::Committed;
            ByteWriter w;
            w.bitmat(g_);
            w.bitvec(c * a_);
            w.bitmat(c * b_);
            return StepOutput::of(Message("commit", w.take()));
        }
        if (input.tag == "vector") {
            if (state_ != St::Committed) {
                state_ = St::Dead;
                return StepOutput::abort("state");
            }
            ByteReader r(input.body);
            const gf2::BitVector h = r.bitvec();
            r.expect_done();
            state_ = St::Dead;
            if (h.size() != a_.size() || h.is_zero()) return StepOutput::abort("bad-shape");
            const gf2::BitVector pad = g_ * (b_ * h);
            ByteWriter w;
            w.bitvec(s0_ + pad);
            w.bitvec(s1_ + pad + g_ * a_);
            return StepOutput::of(Message("ciphertexts", w.take()));
        }
        state_ = St::Dead;
        return StepOutput::abort("bad-shape");
    } catch (const std::invalid_argument&) {
        state_ = St::Dead;
        return StepOutput::abort("bad-shape");
    }
}

GoliathSetup GoliathSetup::sample(unsigned lambda, gf2::BitVector s0, gf2::BitVector s1, Prg& rng) {
    GoliathSetup setup;
    setup.lambda = lambda;
    setup.a = gf2::BitVector::random(2 * lambda, rng);
    setup.b = gf2::BitMatrix::random(2 * lambda, 2 * lambda, rng);
    setup.s0 = std::move(s0);
    setup.s1 = std::move(s1);
    return setup;
}

std::unique_ptr<TokenProgram> GoliathSetup::make_random_token() const {
    return std::make_unique<RandomToken>(a, b);
}

std::unique_ptr<TokenProgram> GoliathSetup::make_inputs_token() const {
    return std::make_unique<InputsToken>(s0, s1, a, b);
}

Message choice_message(const gf2::BitVector& z) {
    ByteWriter w;
    w.bitvec(z);
    return Message("choice", w.take());
}

Message matrix_message(const gf2::BitMatrix& c) {
    ByteWriter w;
    w.bitmat(c);
    return Message("matrix", w.take());
}

Message vector_message(const gf2::BitVector& h) {
    ByteWriter w;
    w.bitvec(h);
    return Message("vector", w.take());
}

namespace {

AbortCause cause_of_token_abort(const Message& reply) {
    try {
        return abort_cause_from_string(abort_reason(reply));
    } catch (const std::invalid_argument&) {
        return AbortCause::State;
    }
}

}  // namespace

DeliverResult david_deliver(TokenWrapper& inputs_token, unsigned lambda, Prg& rng) {
    DeliveredState d;
    d.lambda = lambda;
    d.c = gf2::BitMatrix::random(lambda, 2 * lambda, rng);

    const auto commit_reply = inputs_token.execute(matrix_message(d.c)).reply;
    if (is_abort(commit_reply)) return {std::nullopt, cause_of_token_abort(commit_reply)};
    try {
        ByteReader r(commit_reply.body);
        d.g = r.bitmat();
        d.a_tilde = r.bitvec();
        d.b_tilde = r.bitmat();
        r.expect_done();
    } catch (const std::invalid_argument&) {
        return {std::nullopt, AbortCause::BadShape};
    }
    if (commit_reply.tag != "commit" || d.g.rows() != lambda || d.g.cols() != 2 * lambda ||
        d.a_tilde.size() != lambda || d.b_tilde.rows() != lambda || d.b_tilde.cols() != 2 * lambda)
        return {std::nullopt, AbortCause::BadShape};

    d.h = gf2::BitVector::random_nonzero(2 * lambda, rng);
    const auto cipher_reply = inputs_token.execute(vector_message(d.h)).reply;
    if (is_abort(cipher_reply)) return {std::nullopt, cause_of_token_abort(cipher_reply)};
    try {
        ByteReader r(cipher_reply.body);
        d.st0 = r.bitvec();
        d.st1 = r.bitvec();
        r.expect_done();
    } catch (const std::invalid_argument&) {
        return {std::nullopt, AbortCause::BadShape};
    }
    if (cipher_reply.tag != "ciphertexts" || d.st0.size() != lambda || d.st1.size() != lambda)
        return {std::nullopt, AbortCause::BadShape};
    return {std::move(d), AbortCause::None};
}

Outcome david_choice_check(const DeliveredState& d, bool c, const gf2::BitVector& z,
                           const Message& reply) {
    if (is_abort(reply)) return Outcome::abort(cause_of_token_abort(reply));
    gf2::BitMatrix v;
    try {
        ByteReader r(reply.body);
        v = r.bitmat();
        r.expect_done();
    } catch (const std::invalid_argument&) {
        return Outcome::abort(AbortCause::BadShape);
    }
    if (reply.tag != "matrix" || v.rows() != 2 * d.lambda || v.cols() != 2 * d.lambda)
        return Outcome::abort(AbortCause::BadShape);

    if (d.c * v != outer(d.a_tilde, z) + d.b_tilde) return Outcome::abort(AbortCause::CheckFailed);
    const gf2::BitVector& pad_source = c ? d.st1 : d.st0;
    return Outcome::output(pad_source + d.g * (v * d.h));
}

Outcome david_choice(TokenWrapper& random_token, const DeliveredState& d, bool c, Prg& rng,
                     gf2::BitVector* z_out) {
    const gf2::BitVector z = gf2::sample_z_with_inner_product(d.h, c, rng);
    if (z_out) *z_out = z;
    const auto reply = random_token.execute(choice_message(z)).reply;
    return david_choice_check(d, c, z, reply);
}

SessionResult run_session(const OtmInputs& in, const Options& opts) {
    validate_otm_inputs(in);
    SessionTranscript transcript("otm2-in", in.lambda, in.seed, ChannelMode::Incoming);

    Prg goliath_rng(in.seed, "goliath");
    Prg david_rng(in.seed, "david");

    const GoliathSetup setup = GoliathSetup::sample(in.lambda, in.s0, in.s1, goliath_rng);
    TokenWrapper random_token(ChannelMode::Incoming, &transcript);
    TokenWrapper inputs_token(ChannelMode::Incoming, &transcript);
    random_token.create(opts.random_token_factory ? opts.random_token_factory(setup)
                                                  : setup.make_random_token());
    inputs_token.create(setup.make_inputs_token());
    random_token.deliver();
    inputs_token.deliver();

    auto deliver = david_deliver(inputs_token, in.lambda, david_rng);
    if (!deliver.state) return {Outcome::abort(deliver.cause), std::move(transcript)};

    for (const auto& m : opts.incoming_before_choice) random_token.incoming_deliver(m);

    Outcome outcome = david_choice(random_token, *deliver.state, in.c, david_rng);
    return {std::move(outcome), std::move(transcript)};
}

}  // namespace tokenlab::otm2

#include "tokenlab/ot_single_token.hpp"

namespace tokenlab::ot1 {

SessionOutput run_session(const OtmInputs& in, const Options& opts) {
    validate_otm_inputs(in);
    SessionTranscript transcript("ot1-in", in.lambda, in.seed, opts.mode);

    Prg goliath_rng(in.seed, "goliath");
    Prg david_rng(in.seed, "david");

    const otm2::GoliathSetup setup =
        otm2::GoliathSetup::sample(in.lambda, in.s0, in.s1, goliath_rng);
    TokenWrapper token(opts.mode, &transcript);
    token.create(opts.inputs_token_factory ? opts.inputs_token_factory(setup)
                                           : setup.make_inputs_token());
    token.deliver();

    auto deliver = otm2::david_deliver(token, in.lambda, david_rng);
    if (opts.goliath_tap) opts.goliath_tap(token);
    if (!deliver.state) return {Outcome::abort(deliver.cause), std::move(transcript), {}};

    // the affine-map query goes to Goliath instead of a second token
    const gf2::BitVector z = gf2::sample_z_with_inner_product(deliver.state->h, in.c, david_rng);
    const Message query = otm2::choice_message(z);
    transcript.record(Channel::DavidToGoliath, query);
    const Message reply = opts.goliath_answer
                              ? opts.goliath_answer(setup, z)
                              : [&] {
                                    ByteWriter w;
                                    w.bitmat(outer(setup.a, z) + setup.b);
                                    return Message("matrix", w.take());
                                }();
    transcript.record(Channel::GoliathToDavid, reply);

    Outcome outcome = otm2::david_choice_check(*deliver.state, in.c, z, reply);
    return {std::move(outcome), std::move(transcript), z};
}

gf2::BitVector derandomize(const RandomOtTuple& rot, const gf2::BitVector& s0,
                           const gf2::BitVector& s1, bool c) {
    if (rot.r0.size() != s0.size() || rot.r1.size() != s1.size() || rot.rd.size() != s0.size())
        throw std::invalid_argument("derandomize: length mismatch");
    const bool e = c != rot.d;
    const gf2::BitVector x0 = s0 + (e ? rot.r1 : rot.r0);
    const gf2::BitVector x1 = s1 + (e ? rot.r0 : rot.r1);
    return (c ? x1 : x0) + rot.rd;
}

SessionResult run_derandomized_session(const OtmInputs& in) {
    validate_otm_inputs(in);
    Prg goliath_rng(in.seed, "goliath-derand");
    Prg david_rng(in.seed, "david-derand");

    OtmInputs random_in = in;
    random_in.s0 = gf2::BitVector::random(in.lambda, goliath_rng);
    random_in.s1 = gf2::BitVector::random(in.lambda, goliath_rng);
    random_in.c = david_rng.next_bit();

    SessionOutput random_ot = run_session(random_in);
    if (!random_ot.outcome.ok)
        return {std::move(random_ot.outcome), std::move(random_ot.transcript)};

    RandomOtTuple rot{random_in.s0, random_in.s1, random_in.c, random_ot.outcome.value};
    Outcome outcome = Outcome::output(derandomize(rot, in.s0, in.s1, in.c));

    // record the two derandomization flows on the party channel
    ByteWriter w_e;
    w_e.u8(in.c != rot.d ? 1 : 0);
    random_ot.transcript.record(Channel::DavidToGoliath, Message("derand-e", w_e.take()));
    const bool e = in.c != rot.d;
    ByteWriter w_x;
    w_x.bitvec(in.s0 + (e ? rot.r1 : rot.r0));
    w_x.bitvec(in.s1 + (e ? rot.r0 : rot.r1));
    random_ot.transcript.record(Channel::GoliathToDavid, Message("derand-x", w_x.take()));

    return {std::move(outcome), std::move(random_ot.transcript)};
}

}  // namespace tokenlab::ot1

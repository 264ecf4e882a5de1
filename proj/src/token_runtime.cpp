#include "tokenlab/token_runtime.hpp"

namespace tokenlab {

void TokenWrapper::create(std::unique_ptr<TokenProgram> program) {
    if (phase_ != Phase::Wait) throw StateError("create: token already created");
    program_ = std::move(program);
    phase_ = Phase::Sent;
    if (transcript_) transcript_->record(Channel::GoliathToToken, Message("create"));
}

void TokenWrapper::deliver() {
    if (phase_ != Phase::Sent) throw StateError("deliver: nothing to deliver");
    phase_ = Phase::Ready;
}

StepOutput TokenWrapper::run_program(const Message& input) {
    if (input.body.size() > limits_.max_message_bytes || activations_ >= limits_.max_activations)
        return StepOutput::abort("budget");
    ++activations_;
    StepOutput out = program_->step(input);
    if (out.reply.body.size() > limits_.max_message_bytes) return StepOutput::abort("budget");
    return out;
}

TokenWrapper::ExecuteResult TokenWrapper::execute(const Message& input) {
    if (phase_ != Phase::Ready) throw StateError("execute: token not ready");
    if (transcript_) transcript_->record(Channel::DavidToToken, input);
    StepOutput out = run_program(input);
    if (transcript_) transcript_->record(Channel::TokenToDavid, out.reply);
    for (auto& m : out.outgoing) {
        if (mode_ != ChannelMode::Outgoing) continue;  // no channel, message is lost
        if (transcript_) transcript_->record(Channel::TokenToGoliath, m);
        outbox_.push_back(std::move(m));
    }
    return {std::move(out.reply), std::move(out.ot_offer)};
}

void TokenWrapper::incoming_deliver(const Message& m) {
    if (mode_ != ChannelMode::Incoming)
        throw ChannelError("incoming_deliver: no incoming channel");
    if (phase_ == Phase::Wait) throw StateError("incoming_deliver: no token stored");
    ++channel_uses_;
    if (transcript_) transcript_->record(Channel::GoliathToToken, m);
    run_program(m);  // output stays inside the wrapper
}

std::vector<Message> TokenWrapper::drain_outgoing() {
    if (mode_ != ChannelMode::Outgoing)
        throw ChannelError("drain_outgoing: no outgoing channel");
    ++channel_uses_;
    std::vector<Message> out = std::move(outbox_);
    outbox_.clear();
    return out;
}

Snapshot TokenWrapper::snapshot() const {
    Snapshot s;
    if (program_) s.program_ = std::shared_ptr<const TokenProgram>(program_->clone());
    s.phase_ = static_cast<int>(phase_);
    s.activations_ = activations_;
    return s;
}

void TokenWrapper::restore(const Snapshot& s) {
    program_ = s.program_ ? s.program_->clone() : nullptr;
    phase_ = static_cast<Phase>(s.phase_);
    activations_ = s.activations_;
    outbox_.clear();
}

}  // namespace tokenlab

#include "tokenlab/transcript.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tokenlab/outcome.hpp"

namespace tokenlab {

using nlohmann::json;

std::string to_string(Channel c) {
    switch (c) {
        case Channel::DavidToToken: return "david->token";
        case Channel::TokenToDavid: return "token->david";
        case Channel::GoliathToDavid: return "goliath->david";
        case Channel::DavidToGoliath: return "david->goliath";
        case Channel::GoliathToToken: return "goliath->token";
        case Channel::TokenToGoliath: return "token->goliath";
    }
    throw std::logic_error("unknown channel");
}

Channel channel_from_string(const std::string& name) {
    for (auto c : {Channel::DavidToToken, Channel::TokenToDavid, Channel::GoliathToDavid,
                   Channel::DavidToGoliath, Channel::GoliathToToken, Channel::TokenToGoliath})
        if (to_string(c) == name) return c;
    throw std::invalid_argument("unknown channel name: " + name);
}

std::string to_string(ChannelMode m) {
    switch (m) {
        case ChannelMode::None: return "none";
        case ChannelMode::Incoming: return "incoming";
        case ChannelMode::Outgoing: return "outgoing";
    }
    throw std::logic_error("unknown channel mode");
}

ChannelMode channel_mode_from_string(const std::string& name) {
    for (auto m : {ChannelMode::None, ChannelMode::Incoming, ChannelMode::Outgoing})
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown channel mode: " + name);
}

std::string to_string(AbortCause cause) {
    switch (cause) {
        case AbortCause::None: return "none";
        case AbortCause::BadShape: return "bad-shape";
        case AbortCause::State: return "state";
        case AbortCause::CheckFailed: return "check-failed";
        case AbortCause::SwitchedOff: return "switched-off";
        case AbortCause::NotUnique: return "not-unique";
        case AbortCause::BudgetExceeded: return "budget-exceeded";
    }
    throw std::logic_error("unknown abort cause");
}

AbortCause abort_cause_from_string(const std::string& name) {
    for (auto c : {AbortCause::None, AbortCause::BadShape, AbortCause::State,
                   AbortCause::CheckFailed, AbortCause::SwitchedOff, AbortCause::NotUnique,
                   AbortCause::BudgetExceeded})
        if (to_string(c) == name) return c;
    throw std::invalid_argument("unknown abort cause: " + name);
}

std::string SessionTranscript::to_jsonl() const {
    std::ostringstream out;
    json header = {
        {"protocol_id", protocol_id_},
        {"lambda", lambda_},
        {"seed", seed_},
        {"channel_mode", to_string(mode_)},
    };
    for (const auto& [k, v] : annotations_) header[k] = v;
    out << header.dump() << '\n';
    for (const auto& e : entries_) {
        json line = {
            {"step", e.step},
            {"channel", to_string(e.channel)},
            {"payload_hex", to_hex(e.payload)},
        };
        out << line.dump() << '\n';
    }
    return out.str();
}

SessionTranscript SessionTranscript::from_jsonl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("transcript: missing header");
    const json header = json::parse(line);

    SessionTranscript t(header.at("protocol_id").get<std::string>(),
                        header.at("lambda").get<unsigned>(),
                        header.at("seed").get<std::uint64_t>(),
                        channel_mode_from_string(header.at("channel_mode").get<std::string>()));
    for (const auto& [key, value] : header.items())
        if (key != "protocol_id" && key != "lambda" && key != "seed" && key != "channel_mode")
            t.annotations_[key] = value.get<std::string>();

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json e = json::parse(line);
        TranscriptEntry entry{
            e.at("step").get<std::uint64_t>(),
            channel_from_string(e.at("channel").get<std::string>()),
            from_hex(e.at("payload_hex").get<std::string>()),
        };
        if (entry.step != t.next_step_)
            throw std::invalid_argument("transcript: non-contiguous step index");
        ++t.next_step_;
        t.entries_.push_back(std::move(entry));
    }
    return t;
}

}  // namespace tokenlab

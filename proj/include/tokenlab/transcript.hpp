#pragma once

#include <cstdint>
#include <optional>
#include <map>
#include <string>
#include <vector>

#include "tokenlab/message.hpp"

namespace tokenlab {

enum class Channel {
    DavidToToken,
    TokenToDavid,
    GoliathToDavid,
    DavidToGoliath,
    GoliathToToken,
    TokenToGoliath,
};

enum class ChannelMode { None, Incoming, Outgoing };

std::string to_string(Channel c);
Channel channel_from_string(const std::string& name);
std::string to_string(ChannelMode m);
ChannelMode channel_mode_from_string(const std::string& name);

struct TranscriptEntry {
    std::uint64_t step;
    Channel channel;
    Bytes payload;

    bool operator==(const TranscriptEntry& rhs) const {
        return step == rhs.step && channel == rhs.channel && payload == rhs.payload;
    }
};

// Ordered record of every message on every channel of one session.
// Serialized as JSON lines: a header object followed by one entry per
// line with fields (step, channel, payload_hex).
class SessionTranscript {
public:
    SessionTranscript() = default;
    SessionTranscript(std::string protocol_id, unsigned lambda, std::uint64_t seed, ChannelMode mode)
        : protocol_id_(std::move(protocol_id)), lambda_(lambda), seed_(seed), mode_(mode) {}

    void record(Channel channel, Bytes payload) {
        entries_.push_back({next_step_++, channel, std::move(payload)});
    }
    void record(Channel channel, const Message& m) { record(channel, m.to_bytes()); }

    const std::string& protocol_id() const { return protocol_id_; }
    unsigned lambda() const { return lambda_; }
    std::uint64_t seed() const { return seed_; }
    ChannelMode mode() const { return mode_; }
    const std::vector<TranscriptEntry>& entries() const { return entries_; }

    // Extra header fields (inputs, outcome) keyed by name; values are
    // stored verbatim in the header object so a transcript alone is
    // enough to re-run the session.
    void set_annotation(const std::string& key, const std::string& value) {
        annotations_[key] = value;
    }
    std::optional<std::string> annotation(const std::string& key) const {
        auto it = annotations_.find(key);
        if (it == annotations_.end()) return std::nullopt;
        return it->second;
    }

    std::string to_jsonl() const;
    static SessionTranscript from_jsonl(const std::string& text);

    bool operator==(const SessionTranscript& rhs) const {
        return protocol_id_ == rhs.protocol_id_ && lambda_ == rhs.lambda_ && seed_ == rhs.seed_ &&
               mode_ == rhs.mode_ && entries_ == rhs.entries_ && annotations_ == rhs.annotations_;
    }

private:
    std::string protocol_id_;
    unsigned lambda_ = 0;
    std::uint64_t seed_ = 0;
    ChannelMode mode_ = ChannelMode::None;
    std::vector<TranscriptEntry> entries_;
    std::map<std::string, std::string> annotations_;
    std::uint64_t next_step_ = 0;
};

}  // namespace tokenlab

#include "tokenlab/message.hpp"

namespace tokenlab {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex digit");
}
}  // namespace

std::string to_hex(const Bytes& data) {
    std::string out;
    out.reserve(2 * data.size());
    for (auto b : data) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0xf]);
    }
    return out;
}

Bytes from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(hex_value(hex[2 * i]) << 4 | hex_value(hex[2 * i + 1]));
    return out;
}

Bytes Message::to_bytes() const {
    if (tag.size() > 255) throw std::invalid_argument("message tag too long");
    Bytes out;
    out.reserve(1 + tag.size() + body.size());
    out.push_back(static_cast<std::uint8_t>(tag.size()));
    out.insert(out.end(), tag.begin(), tag.end());
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

Message Message::from_bytes(const Bytes& data) {
    if (data.empty()) throw std::invalid_argument("empty message frame");
    const std::size_t tag_len = data[0];
    if (data.size() < 1 + tag_len) throw std::invalid_argument("truncated message frame");
    Message m;
    m.tag.assign(data.begin() + 1, data.begin() + 1 + static_cast<std::ptrdiff_t>(tag_len));
    m.body.assign(data.begin() + 1 + static_cast<std::ptrdiff_t>(tag_len), data.end());
    return m;
}

}  // namespace tokenlab

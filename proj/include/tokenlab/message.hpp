#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tokenlab/gf2.hpp"

namespace tokenlab {

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(const Bytes& data);
Bytes from_hex(const std::string& hex);

// Channel message: a short ASCII tag plus an opaque body. Wire form is
// [u8 tag length][tag][body], which is what transcripts carry as hex.
struct Message {
    std::string tag;
    Bytes body;

    Message() = default;
    explicit Message(std::string t) : tag(std::move(t)) {}
    Message(std::string t, Bytes b) : tag(std::move(t)), body(std::move(b)) {}

    Bytes to_bytes() const;
    static Message from_bytes(const Bytes& data);

    bool operator==(const Message& rhs) const { return tag == rhs.tag && body == rhs.body; }
};

// Body builder with fixed little-endian integer layout.
class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void raw(const Bytes& data) { out_.insert(out_.end(), data.begin(), data.end()); }
    void blob(const Bytes& data) {
        u32(static_cast<std::uint32_t>(data.size()));
        raw(data);
    }
    void bitvec(const gf2::BitVector& v) {
        u32(static_cast<std::uint32_t>(v.size()));
        raw(v.to_bytes());
    }
    void bitmat(const gf2::BitMatrix& m) {
        u32(static_cast<std::uint32_t>(m.rows()));
        u32(static_cast<std::uint32_t>(m.cols()));
        raw(m.to_bytes());
    }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

class ByteReader {
public:
    explicit ByteReader(const Bytes& data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t{data_[pos_++]} << (8 * i);
        return v;
    }
    Bytes raw(std::size_t n) {
        need(n);
        Bytes out(data_.begin() + static_cast<std::ptrdiff_t>(pos_),
                  data_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
        pos_ += n;
        return out;
    }
    Bytes blob() { return raw(u32()); }
    gf2::BitVector bitvec() {
        const std::uint32_t bits = u32();
        const Bytes raw_bytes = raw((bits + 7) / 8);
        return gf2::BitVector::from_bytes(raw_bytes, bits);
    }
    gf2::BitMatrix bitmat() {
        const std::uint32_t rows = u32();
        const std::uint32_t cols = u32();
        const Bytes raw_bytes = raw(static_cast<std::size_t>(rows) * ((cols + 7) / 8));
        return gf2::BitMatrix::from_bytes(raw_bytes.data(), rows, cols);
    }
    bool done() const { return pos_ == data_.size(); }
    void expect_done() const {
        if (!done()) throw std::invalid_argument("message body has trailing bytes");
    }

private:
    void need(std::size_t n) const {
        if (pos_ + n > data_.size()) throw std::invalid_argument("message body truncated");
    }
    const Bytes& data_;
    std::size_t pos_ = 0;
};

}  // namespace tokenlab

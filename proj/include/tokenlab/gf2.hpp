#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tokenlab/prg.hpp"

namespace tokenlab::gf2 {

// Dense GF(2) vector, bit-packed into 64-bit words (bit i lives in word
// i/64 at position i%64). Bits beyond size() are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

    static BitVector random(std::size_t len, Prg& rng);
    static BitVector random_nonzero(std::size_t len, Prg& rng);
    static BitVector unit(std::size_t len, std::size_t index);
    static BitVector from_bytes(const std::uint8_t* data, std::size_t len_bits);
    static BitVector from_bytes(const std::vector<std::uint8_t>& data, std::size_t len_bits) {
        return from_bytes(data.data(), len_bits);
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    bool is_zero() const;
    std::size_t popcount() const;
    // Index of the lowest set bit; vector must be nonzero.
    std::size_t lowest_set_bit() const;

    BitVector& operator+=(const BitVector& rhs);

    bool operator==(const BitVector& rhs) const { return len_ == rhs.len_ && words_ == rhs.words_; }
    bool operator!=(const BitVector& rhs) const { return !(*this == rhs); }

    // LSB-first byte packing, ceil(len/8) bytes, pad bits zero.
    std::vector<std::uint8_t> to_bytes() const;

    std::string to_string() const;  // e.g. "0110"

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    friend class BitMatrix;
    friend bool dot(const BitVector&, const BitVector&);

    static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
    void clear_tail();

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

BitVector operator+(BitVector lhs, const BitVector& rhs);
// Inner product over GF(2): parity of the AND.
bool dot(const BitVector& a, const BitVector& b);

// Dense GF(2) matrix, row-major, each row padded to whole 64-bit words
// with zero tail bits.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(BitVector::word_count(cols)), words_(rows * wpr_, 0) {}

    static BitMatrix random(std::size_t rows, std::size_t cols, Prg& rng);
    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);
    static BitMatrix from_bytes(const std::uint8_t* data, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            words_[r * wpr_ + (c >> 6)] |= mask;
        else
            words_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void xor_row(std::size_t r, std::size_t source_row);  // row r += row source_row

    bool is_zero() const;

    BitMatrix& operator+=(const BitMatrix& rhs);
    bool operator==(const BitMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && words_ == rhs.words_;
    }
    bool operator!=(const BitMatrix& rhs) const { return !(*this == rhs); }

    BitMatrix transposed() const;

    // Row-major packing: rows()*ceil(cols/8) bytes.
    std::vector<std::uint8_t> to_bytes() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

BitMatrix operator+(BitMatrix lhs, const BitMatrix& rhs);
BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs);
BitVector operator*(const BitMatrix& m, const BitVector& v);

// result[i][j] = a[i] * z[j].
BitMatrix outer(const BitVector& a, const BitVector& z);

unsigned rank(const BitMatrix& m);

// Canonical basis of ker(C), one row per free column of the reduced
// echelon form, first `C.rows()` of them in column order. Requires
// cols >= 2*rows so at least rows() kernel vectors exist.
BitMatrix kernel_complement(const BitMatrix& c);

// `C.rows()` independent rows spanning a complement of rowspace(C):
// unit vectors on the first rows() non-pivot columns of C. The stack
// [C; result] always has rank rank(C) + rows().
BitMatrix row_complement(const BitMatrix& c);

// One solution of A*x = b, or nullopt if inconsistent (free variables zero).
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);

BitMatrix stack_rows(const BitMatrix& top, const BitMatrix& bottom);

// Uniform z with dot(z, h) == c: all coordinates except the lowest set
// coordinate of h are free, that one is solved for. h must be nonzero.
BitVector sample_z_with_inner_product(const BitVector& h, bool c, Prg& rng);

}  // namespace tokenlab::gf2

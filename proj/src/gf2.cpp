#include "tokenlab/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace tokenlab::gf2 {

namespace {

std::uint64_t tail_mask(std::size_t bits) {
    const std::size_t rem = bits & 63;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

[[noreturn]] void dim_error(const char* what) { throw std::invalid_argument(what); }

}  // namespace

void BitVector::clear_tail() {
    if (!words_.empty()) words_.back() &= tail_mask(len_);
}

BitVector BitVector::random(std::size_t len, Prg& rng) {
    BitVector v(len);
    for (auto& w : v.words_) w = rng.next_u64();
    v.clear_tail();
    return v;
}

BitVector BitVector::random_nonzero(std::size_t len, Prg& rng) {
    if (len == 0) dim_error("random_nonzero: empty vector");
    BitVector v;
    do {
        v = random(len, rng);
    } while (v.is_zero());
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
    if (index >= len) dim_error("unit: index out of range");
    BitVector v(len);
    v.set(index, true);
    return v;
}

BitVector BitVector::from_bytes(const std::uint8_t* data, std::size_t len_bits) {
    BitVector v(len_bits);
    const std::size_t nbytes = (len_bits + 7) / 8;
    for (std::size_t i = 0; i < nbytes; ++i)
        v.words_[i >> 3] |= std::uint64_t{data[i]} << (8 * (i & 7));
    v.clear_tail();
    return v;
}

bool BitVector::is_zero() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::lowest_set_bit() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0) return 64 * i + static_cast<std::size_t>(std::countr_zero(words_[i]));
    dim_error("lowest_set_bit: zero vector");
}

BitVector& BitVector::operator+=(const BitVector& rhs) {
    if (len_ != rhs.len_) dim_error("BitVector add: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

std::vector<std::uint8_t> BitVector::to_bytes() const {
    const std::size_t nbytes = (len_ + 7) / 8;
    std::vector<std::uint8_t> out(nbytes);
    for (std::size_t i = 0; i < nbytes; ++i)
        out[i] = static_cast<std::uint8_t>((words_[i >> 3] >> (8 * (i & 7))) & 0xff);
    return out;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVector operator+(BitVector lhs, const BitVector& rhs) {
    lhs += rhs;
    return lhs;
}

bool dot(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) dim_error("dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) acc ^= a.words_[i] & b.words_[i];
    return (std::popcount(acc) & 1) != 0;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, Prg& rng) {
    BitMatrix m(rows, cols);
    const std::uint64_t mask = tail_mask(cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t w = 0; w < m.wpr_; ++w)
            m.words_[r * m.wpr_ + w] = rng.next_u64() & (w + 1 == m.wpr_ ? mask : ~std::uint64_t{0});
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    if (rows.empty()) dim_error("from_rows: no rows");
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitMatrix BitMatrix::from_bytes(const std::uint8_t* data, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    const std::size_t row_bytes = (cols + 7) / 8;
    for (std::size_t r = 0; r < rows; ++r)
        m.set_row(r, BitVector::from_bytes(data + r * row_bytes, cols));
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    for (std::size_t w = 0; w < wpr_; ++w) v.words_[w] = words_[r * wpr_ + w];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) dim_error("set_row: length mismatch");
    for (std::size_t w = 0; w < wpr_; ++w) words_[r * wpr_ + w] = v.words_[w];
}

void BitMatrix::xor_row(std::size_t r, std::size_t source_row) {
    for (std::size_t w = 0; w < wpr_; ++w) words_[r * wpr_ + w] ^= words_[source_row * wpr_ + w];
}

bool BitMatrix::is_zero() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) dim_error("BitMatrix add: shape mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::vector<std::uint8_t> BitMatrix::to_bytes() const {
    const std::size_t row_bytes = (cols_ + 7) / 8;
    std::vector<std::uint8_t> out;
    out.reserve(rows_ * row_bytes);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rb = row(r).to_bytes();
        out.insert(out.end(), rb.begin(), rb.end());
    }
    return out;
}

BitMatrix operator+(BitMatrix lhs, const BitMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) dim_error("BitMatrix mul: shape mismatch");
    // result row i = xor of rhs rows selected by lhs row i
    BitMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        BitVector acc(rhs.cols());
        for (std::size_t k = 0; k < lhs.cols(); ++k)
            if (lhs.get(i, k)) acc += rhs.row(k);
        out.set_row(i, acc);
    }
    return out;
}

BitVector operator*(const BitMatrix& m, const BitVector& v) {
    if (m.cols() != v.size()) dim_error("BitMatrix*BitVector: shape mismatch");
    BitVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, dot(m.row(r), v));
    return out;
}

BitMatrix outer(const BitVector& a, const BitVector& z) {
    if (a.size() != z.size()) dim_error("outer: length mismatch");
    BitMatrix out(a.size(), z.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.get(i)) out.set_row(i, z);
    return out;
}

namespace {

// Row echelon form in place; returns pivot column per eliminated row.
std::vector<std::size_t> eliminate(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
        std::size_t pivot_row = next_row;
        while (pivot_row < m.rows() && !m.get(pivot_row, col)) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        if (pivot_row != next_row) {
            // swap via xor, rows differ in this column
            BitVector a = m.row(next_row), b = m.row(pivot_row);
            m.set_row(next_row, b);
            m.set_row(pivot_row, a);
        }
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next_row && m.get(r, col)) m.xor_row(r, next_row);
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

}  // namespace

unsigned rank(const BitMatrix& m) {
    BitMatrix copy = m;
    return static_cast<unsigned>(eliminate(copy).size());
}

BitMatrix kernel_complement(const BitMatrix& c) {
    const std::size_t want = c.rows();
    if (c.cols() < 2 * c.rows()) dim_error("kernel_complement: need cols >= 2*rows");
    BitMatrix rref = c;
    const std::vector<std::size_t> pivots = eliminate(rref);

    std::vector<bool> is_pivot(c.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    BitMatrix g(want, c.cols());
    std::size_t produced = 0;
    for (std::size_t col = 0; col < c.cols() && produced < want; ++col) {
        if (is_pivot[col]) continue;
        BitVector v(c.cols());
        v.set(col, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rref.get(i, col)) v.set(pivots[i], true);
        g.set_row(produced++, v);
    }
    return g;
}

BitMatrix row_complement(const BitMatrix& c) {
    const std::size_t want = c.rows();
    if (c.cols() < 2 * c.rows()) dim_error("row_complement: need cols >= 2*rows");
    BitMatrix rref = c;
    const std::vector<std::size_t> pivots = eliminate(rref);
    std::vector<bool> is_pivot(c.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    BitMatrix g(want, c.cols());
    std::size_t produced = 0;
    for (std::size_t col = 0; col < c.cols() && produced < want; ++col) {
        if (is_pivot[col]) continue;
        g.set(produced++, col, true);
    }
    return g;
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
    if (a.rows() != b.size()) dim_error("solve: shape mismatch");
    // eliminate the augmented matrix [A | b]
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.get(r, c));
        aug.set(r, a.cols(), b.get(r));
    }
    const std::vector<std::size_t> pivots = eliminate(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row

    BitVector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (aug.get(i, a.cols())) x.set(pivots[i], true);
    return x;
}

BitMatrix stack_rows(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols()) dim_error("stack_rows: column mismatch");
    BitMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) out.set_row(r, top.row(r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.set_row(top.rows() + r, bottom.row(r));
    return out;
}

BitVector sample_z_with_inner_product(const BitVector& h, bool c, Prg& rng) {
    if (h.is_zero()) throw std::invalid_argument("sample_z_with_inner_product: h must be nonzero");
    const std::size_t j = h.lowest_set_bit();
    BitVector z = BitVector::random(h.size(), rng);
    z.set(j, false);
    z.set(j, dot(z, h) != c);
    return z;
}

}  // namespace tokenlab::gf2

#include "qlist/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qlist {

namespace {

std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

void require_same_size(const BitVec &a, const BitVec &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "BitVec length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitVec::BitVec(std::size_t len) : len_(len), words_(word_count(len), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.flip(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bad bit character '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

BitVec BitVec::from_uint(std::uint64_t value, std::size_t len) {
    BitVec v(len);
    if (len == 0) return v;
    if (len < 64) value &= (std::uint64_t{1} << len) - 1;
    v.words_[0] = value;
    return v;
}

void BitVec::set(std::size_t i, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitVec::clear() { std::fill(words_.begin(), words_.end(), 0); }

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    require_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    require_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

bool BitVec::dot(const BitVec &other) const {
    require_same_size(*this, other);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::size_t BitVec::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool BitVec::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    }
    return len_;
}

BitVec BitVec::concat(const BitVec &tail) const {
    BitVec out(len_ + tail.len_);
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) out.flip(i);
    }
    for (std::size_t i = 0; i < tail.len_; ++i) {
        if (tail.get(i)) out.flip(len_ + i);
    }
    return out;
}

BitVec BitVec::slice(std::size_t begin, std::size_t count) const {
    if (begin + count > len_) throw std::out_of_range("BitVec slice out of range");
    BitVec out(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (get(begin + i)) out.flip(i);
    }
    return out;
}

std::uint64_t BitVec::to_uint() const { return words_.empty() ? 0 : words_[0]; }

std::string BitVec::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::string BitVec::hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::size_t digits = (len_ + 3) / 4;
    std::string s(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
        unsigned nibble = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            std::size_t i = 4 * d + b;
            if (i < len_ && get(i)) nibble |= 1u << b;
        }
        s[digits - 1 - d] = kDigits[nibble];
    }
    return s;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t len) {
    BitVec v(len);
    std::size_t digits = hex.size();
    for (std::size_t d = 0; d < digits; ++d) {
        int nibble = hex_value(hex[digits - 1 - d]);
        if (nibble < 0) throw std::invalid_argument("bad hex digit in '" + std::string(hex) + "'");
        for (std::size_t b = 0; b < 4; ++b) {
            if (!((nibble >> b) & 1)) continue;
            std::size_t i = 4 * d + b;
            if (i >= len) throw std::invalid_argument("hex value '" + std::string(hex) + "' exceeds length");
            v.flip(i);
        }
    }
    return v;
}

std::strong_ordering operator<=>(const BitVec &a, const BitVec &b) {
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff) {
            // Lowest differing bit decides; the vector with a 0 there sorts first.
            std::uint64_t low = diff & (~diff + 1);
            return (a.words_[w] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix::BitMatrix(std::vector<BitVec> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
    if (!rows_.empty()) cols_ = rows_.front().size();
    for (const auto &r : rows_) {
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix rows have inconsistent lengths");
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    std::vector<BitVec> parsed;
    parsed.reserve(rows.size());
    for (const auto &r : rows) parsed.push_back(BitVec::from_string(r));
    return BitMatrix(std::move(parsed));
}

void BitMatrix::append_row(BitVec row) {
    if (rows_.empty() && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("appended row has wrong length");
    rows_.push_back(std::move(row));
}

BitVec BitMatrix::apply(const BitVec &x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix::apply dimension mismatch");
    BitVec out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].dot(x)) out.flip(i);
    }
    return out;
}

Echelon row_reduce(const BitMatrix &m) {
    std::vector<BitVec> work = m.row_vectors();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols() && next < work.size(); ++col) {
        std::size_t found = next;
        while (found < work.size() && !work[found].get(col)) ++found;
        if (found == work.size()) continue;
        std::swap(work[next], work[found]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r != next && work[r].get(col)) work[r] ^= work[next];
        }
        pivots.push_back(col);
        ++next;
    }
    work.resize(next);
    return Echelon{BitMatrix(std::move(work), m.cols()), std::move(pivots)};
}

std::size_t rank(const BitMatrix &m) { return row_reduce(m).pivots.size(); }

std::optional<BitVec> solve(const BitMatrix &m, const BitVec &b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument(
            "solve: right-hand side has " + std::to_string(b.size()) + " bits, matrix has " +
            std::to_string(m.rows()) + " rows");
    }
    // Eliminate on the augmented matrix [m | b]; the last column is never a pivot
    // candidate for a consistent system.
    std::vector<BitVec> augmented;
    augmented.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVec rhs(1);
        rhs.set(0, b.get(r));
        augmented.push_back(m.row(r).concat(rhs));
    }
    Echelon e = row_reduce(BitMatrix(std::move(augmented), m.cols() + 1));
    BitVec x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt;
        if (e.reduced.row(i).get(m.cols())) x.set(e.pivots[i], true);
    }
    return x;
}

BitMatrix kernel_basis(const BitMatrix &m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    BitMatrix basis(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVec v(m.cols());
        v.set(free, true);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            if (e.reduced.row(i).get(free)) v.set(e.pivots[i], true);
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

BitVec SpanBuilder::reduce(BitVec v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (v.get(pivots_[i])) v ^= basis_[i];
    }
    return v;
}

bool SpanBuilder::contains(const BitVec &v) const { return reduce(v).none(); }

bool SpanBuilder::insert(const BitVec &v) {
    if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: vector has wrong length");
    BitVec r = reduce(v);
    std::size_t pivot = r.first_set();
    if (pivot == dim_) return false;
    // Keep the basis fully reduced: clear the new pivot from existing rows.
    for (auto &b : basis_) {
        if (b.get(pivot)) b ^= r;
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    basis_.insert(basis_.begin() + pos, std::move(r));
    return true;
}

std::vector<BitVec> SpanBuilder::basis() const { return basis_; }

}  // namespace qlist

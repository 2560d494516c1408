#ifndef QLIST_GF2_H
#define QLIST_GF2_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlist {

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits at positions >= size() are always zero, so word-wise comparisons and
/// popcounts never see garbage.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t len);

    /// Parses a string of '0'/'1' characters, bit 0 first.
    static BitVec from_string(std::string_view bits);
    /// Low `len` bits of `value`, bit i = (value >> i) & 1.
    static BitVec from_uint(std::uint64_t value, std::size_t len);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void clear();

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec &b) { return a |= b; }

    /// Parity of the bitwise AND.
    bool dot(const BitVec &other) const;
    std::size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }
    /// Index of the lowest set bit, or size() if none.
    std::size_t first_set() const;

    /// Concatenation: this then `tail`.
    BitVec concat(const BitVec &tail) const;
    /// Bits [begin, begin + count).
    BitVec slice(std::size_t begin, std::size_t count) const;

    /// Value of the first min(size(), 64) bits as an integer (bit i -> 2^i).
    std::uint64_t to_uint() const;

    /// '0'/'1' characters, bit 0 first.
    std::string str() const;
    /// Hex digits of the integer sum(bit_i * 2^i), most significant digit first,
    /// zero-padded to ceil(size()/4) digits.
    std::string hex() const;
    static BitVec from_hex(std::string_view hex, std::size_t len);

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const BitVec &a, const BitVec &b) = default;
    /// Length first, then lexicographic from bit 0.
    friend std::strong_ordering operator<=>(const BitVec &a, const BitVec &b);

   private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix stored as a row sequence.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    /// All rows must share a length; `cols` is only consulted when rows is empty.
    explicit BitMatrix(std::vector<BitVec> rows, std::size_t cols = 0);

    static BitMatrix identity(std::size_t n);
    /// Rows given as '0'/'1' strings.
    static BitMatrix from_strings(const std::vector<std::string> &rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const BitVec &row(std::size_t i) const { return rows_[i]; }
    BitVec &row(std::size_t i) { return rows_[i]; }
    const std::vector<BitVec> &row_vectors() const { return rows_; }
    void append_row(BitVec row);

    /// Matrix-vector product a * x, x.size() == cols().
    BitVec apply(const BitVec &x) const;

    friend bool operator==(const BitMatrix &a, const BitMatrix &b) = default;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
    BitMatrix reduced;                 // nonzero rows only
    std::vector<std::size_t> pivots;   // pivots[i] is the pivot column of reduced.row(i)
};

/// Gauss-Jordan elimination on a copy; pivots are taken at the lowest
/// available column, the pivot row being the first remaining row with that bit.
Echelon row_reduce(const BitMatrix &m);

std::size_t rank(const BitMatrix &m);

/// Some x with m * x == b, free variables set to zero. Throws
/// std::invalid_argument when b.size() != m.rows().
std::optional<BitVec> solve(const BitMatrix &m, const BitVec &b);

/// Basis of {x : m * x = 0}, one row per free column in increasing order.
BitMatrix kernel_basis(const BitMatrix &m);

/// Incrementally maintained reduced basis of a subspace of GF(2)^dim.
class SpanBuilder {
   public:
    explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

    /// Adds v to the span; returns true if the dimension grew.
    bool insert(const BitVec &v);
    bool contains(const BitVec &v) const;
    /// v reduced against the current basis (zero iff v is in the span).
    BitVec reduce(BitVec v) const;

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    /// Fully reduced basis sorted by pivot column.
    std::vector<BitVec> basis() const;

   private:
    std::size_t dim_;
    std::vector<BitVec> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace qlist

#endif

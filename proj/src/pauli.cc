#include "qlist/pauli.h"

#include <limits>

namespace qlist {

namespace {

void require_same_qubits(const PauliOp &p, const PauliOp &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(
            "Pauli qubit count mismatch: " + std::to_string(p.num_qubits()) + " vs " +
            std::to_string(q.num_qubits()));
    }
}

std::uint8_t y_count(const BitVec &x, const BitVec &z) { return static_cast<std::uint8_t>((x & z).popcount() & 3); }

}  // namespace

PauliOp::PauliOp(std::size_t n) : x_(n), z_(n) {}

PauliOp::PauliOp(BitVec x, BitVec z, std::uint8_t phase) : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {
    if (x_.size() != z_.size()) throw std::invalid_argument("PauliOp: x and z lengths differ");
}

PauliOp PauliOp::from_string(std::string_view text) {
    std::uint8_t token = 0;
    if (text.starts_with("-i")) {
        token = 3;
        text.remove_prefix(2);
    } else if (text.starts_with("+i")) {
        token = 1;
        text.remove_prefix(2);
    } else if (text.starts_with("i")) {
        token = 1;
        text.remove_prefix(1);
    } else if (text.starts_with("-")) {
        token = 2;
        text.remove_prefix(1);
    } else if (text.starts_with("+")) {
        text.remove_prefix(1);
    }
    BitVec x(text.size());
    BitVec z(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x.flip(q);
                break;
            case 'Z':
                z.flip(q);
                break;
            case 'Y':
                x.flip(q);
                z.flip(q);
                break;
            default:
                throw std::invalid_argument("bad Pauli letter '" + std::string(1, text[q]) + "'");
        }
    }
    std::uint8_t phase = (token + y_count(x, z)) & 3;
    return PauliOp(std::move(x), std::move(z), phase);
}

PauliOp PauliOp::single(std::size_t n, std::size_t qubit, char letter) {
    if (qubit >= n) throw std::out_of_range("PauliOp::single: qubit out of range");
    BitVec x(n);
    BitVec z(n);
    switch (letter) {
        case 'I':
            break;
        case 'X':
            x.flip(qubit);
            break;
        case 'Z':
            z.flip(qubit);
            break;
        case 'Y':
            x.flip(qubit);
            z.flip(qubit);
            break;
        default:
            throw std::invalid_argument("bad Pauli letter '" + std::string(1, letter) + "'");
    }
    return PauliOp(std::move(x), std::move(z)).hermitian();
}

PauliOp PauliOp::from_symplectic(const BitVec &xz) {
    if (xz.size() % 2) throw std::invalid_argument("symplectic row must have even length");
    std::size_t n = xz.size() / 2;
    return PauliOp(xz.slice(0, n), xz.slice(n, n)).hermitian();
}

char PauliOp::letter(std::size_t qubit) const {
    static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(x_.get(qubit) ? 1 : 0) | (z_.get(qubit) ? 2 : 0)];
}

std::string PauliOp::str() const {
    static constexpr const char *kTokens[] = {"", "i", "-", "-i"};
    std::string s = kTokens[(phase_ - y_count(x_, z_)) & 3];
    s.reserve(s.size() + num_qubits());
    for (std::size_t q = 0; q < num_qubits(); ++q) s.push_back(letter(q));
    return s;
}

std::size_t PauliOp::weight() const { return (x_ | z_).popcount(); }

PauliOp PauliOp::hermitian() const { return PauliOp(x_, z_, y_count(x_, z_)); }

PauliOp PauliOp::dagger() const {
    // (i^t X^x Z^z)^dagger = i^-t Z^z X^x = i^-t (-1)^{x.z} X^x Z^z
    std::uint8_t phase = static_cast<std::uint8_t>((4 - phase_) + (x_.dot(z_) ? 2 : 0)) & 3;
    return PauliOp(x_, z_, phase);
}

PauliOp &PauliOp::operator*=(const PauliOp &rhs) {
    require_same_qubits(*this, rhs);
    // Moving Z^{z_lhs} past X^{x_rhs} picks up (-1)^{z_lhs . x_rhs}.
    std::uint8_t sign = z_.dot(rhs.x_) ? 2 : 0;
    phase_ = static_cast<std::uint8_t>(phase_ + rhs.phase_ + sign) & 3;
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    return *this;
}

bool omega(const PauliOp &p, const PauliOp &q) {
    require_same_qubits(p, q);
    return p.x().dot(q.z()) ^ q.x().dot(p.z());
}

bool symplectic_form(const BitVec &a, const BitVec &b) {
    if (a.size() != b.size() || a.size() % 2) throw std::invalid_argument("symplectic_form: bad lengths");
    std::size_t m = a.size() / 2;
    bool acc = false;
    for (std::size_t i = 0; i < m; ++i) {
        acc ^= (a.get(i) && b.get(m + i)) ^ (b.get(i) && a.get(m + i));
    }
    return acc;
}

std::size_t symplectic_rank(std::span<const PauliOp> ps) {
    if (ps.empty()) return 0;
    SpanBuilder span(2 * ps.front().num_qubits());
    for (const auto &p : ps) {
        if (p.num_qubits() != ps.front().num_qubits()) throw std::invalid_argument("symplectic_rank: mixed qubit counts");
        span.insert(p.symplectic());
    }
    return span.rank();
}

CapExceeded::CapExceeded(std::uint64_t required, std::uint64_t cap)
    : std::runtime_error(
          "enumeration refused: " + std::to_string(required) + " elements exceeds cap " + std::to_string(cap)),
      required_(required),
      cap_(cap) {}

std::uint64_t error_count(std::size_t n, std::size_t t) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t term = 1;  // 3^r C(n, r)
    for (std::size_t r = 0; r <= t && r <= n; ++r) {
        if (total > kMax - term) return kMax;
        total += term;
        if (r == n) break;
        // term *= 3 (n - r) / (r + 1), exact since 3^{r+1} C(n, r+1) is an integer.
        unsigned __int128 next = static_cast<unsigned __int128>(term) * 3 * (n - r) / (r + 1);
        if (next > kMax) return kMax;
        term = static_cast<std::uint64_t>(next);
    }
    return total;
}

ErrorSet enumerate_errors(std::size_t n, std::size_t t, std::uint64_t cap) {
    if (t > n) throw std::domain_error("enumerate_errors: t exceeds n");
    std::uint64_t count = error_count(n, t);
    if (count > cap) throw CapExceeded(count, cap);

    ErrorSet set{n, t, {}};
    set.elements.reserve(count);
    static constexpr char kLetters[] = {'X', 'Y', 'Z'};
    for (std::size_t w = 0; w <= t; ++w) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        while (true) {
            std::vector<int> letters(w, 0);
            while (true) {
                BitVec x(n);
                BitVec z(n);
                for (std::size_t i = 0; i < w; ++i) {
                    char c = kLetters[letters[i]];
                    if (c != 'Z') x.flip(support[i]);
                    if (c != 'X') z.flip(support[i]);
                }
                set.elements.push_back(PauliOp(std::move(x), std::move(z)).hermitian());
                // Odometer with the last support qubit varying fastest.
                std::size_t pos = w;
                while (pos > 0 && letters[pos - 1] == 2) letters[--pos] = 0;
                if (pos == 0) break;
                ++letters[pos - 1];
            }
            // Next support combination in lexicographic order.
            std::size_t i = w;
            while (i > 0 && support[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++support[i - 1];
            for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
        }
    }
    return set;
}

}  // namespace qlist

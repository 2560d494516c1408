// Independent brute-force oracles for the unit and acceptance tests. Nothing
// here calls back into the algorithms it is used to check.
#ifndef QLIST_TESTS_ORACLES_H
#define QLIST_TESTS_ORACLES_H

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qlist/pauli.h"
#include "qlist/stabilizer.h"

namespace oracle {

using cplx = std::complex<double>;

// Dense 2^n x 2^n matrix, row-major.
struct Dense {
    std::size_t dim = 0;
    std::vector<cplx> a;

    cplx at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline Dense kron(const Dense &p, const Dense &q) {
    Dense out{p.dim * q.dim, std::vector<cplx>(p.dim * q.dim * p.dim * q.dim)};
    for (std::size_t r1 = 0; r1 < p.dim; ++r1)
        for (std::size_t c1 = 0; c1 < p.dim; ++c1)
            for (std::size_t r2 = 0; r2 < q.dim; ++r2)
                for (std::size_t c2 = 0; c2 < q.dim; ++c2)
                    out.a[(r1 * q.dim + r2) * out.dim + c1 * q.dim + c2] = p.at(r1, c1) * q.at(r2, c2);
    return out;
}

inline Dense matmul(const Dense &p, const Dense &q) {
    Dense out{p.dim, std::vector<cplx>(p.dim * p.dim)};
    for (std::size_t r = 0; r < p.dim; ++r)
        for (std::size_t k = 0; k < p.dim; ++k)
            for (std::size_t c = 0; c < p.dim; ++c) out.a[r * p.dim + c] += p.at(r, k) * q.at(k, c);
    return out;
}

// Matrix of a Pauli text like "-iXYZ": literal 2x2 letters, Kronecker order
// follows the string.
inline Dense dense_from_text(const std::string &text) {
    std::size_t pos = 0;
    cplx scale = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') scale = -1;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        scale *= cplx(0, 1);
        ++pos;
    }
    Dense out{1, {scale}};
    for (; pos < text.size(); ++pos) {
        Dense letter{2, {}};
        switch (text[pos]) {
            case 'I': letter.a = {1, 0, 0, 1}; break;
            case 'X': letter.a = {0, 1, 1, 0}; break;
            case 'Y': letter.a = {0, cplx(0, -1), cplx(0, 1), 0}; break;
            case 'Z': letter.a = {1, 0, 0, -1}; break;
            default: throw std::invalid_argument("bad letter");
        }
        out = kron(out, letter);
    }
    return out;
}

inline double max_diff(const Dense &p, const Dense &q) {
    double worst = 0;
    for (std::size_t i = 0; i < p.a.size(); ++i) worst = std::max(worst, std::abs(p.a[i] - q.a[i]));
    return worst;
}

// Pauli modulo phase as an integer: bits [0, n) = x, [n, 2n) = z.
inline std::uint64_t pack(const qlist::PauliOp &p) {
    std::uint64_t out = 0;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        char c = p.letter(q);
        if (c == 'X' || c == 'Y') out |= std::uint64_t{1} << q;
        if (c == 'Z' || c == 'Y') out |= std::uint64_t{1} << (p.num_qubits() + q);
    }
    return out;
}

inline bool anticommute(std::uint64_t a, std::uint64_t b, std::size_t n) {
    std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    return (std::popcount((a & mask) & (b >> n)) + std::popcount((a >> n) & (b & mask))) & 1;
}

// Every element of the span, by enumerating all subsets.
inline std::set<std::uint64_t> span_of(const std::vector<std::uint64_t> &gens) {
    std::set<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if ((mask >> i) & 1) v ^= gens[i];
        out.insert(v);
    }
    return out;
}

inline std::size_t span_rank(const std::vector<std::uint64_t> &gens) {
    return static_cast<std::size_t>(std::countr_zero(span_of(gens).size()));
}

// Rank by a textbook xor basis indexed by leading bit.
inline std::size_t rank_of(const std::vector<std::uint64_t> &vs) {
    std::uint64_t basis[64] = {};
    std::size_t rank = 0;
    for (auto v : vs) {
        for (int b = 63; b >= 0 && v; --b) {
            if (!((v >> b) & 1)) continue;
            if (!basis[b]) {
                basis[b] = v;
                ++rank;
                v = 0;
            } else {
                v ^= basis[b];
            }
        }
    }
    return rank;
}

// True when some syndrome class of weight <= t errors holds E_0 plus L + 1
// members whose products with E_0 are independent modulo the stabilizer.
inline bool has_independent_errors(const qlist::StabilizerCode &code, std::size_t t, std::size_t list_length) {
    std::size_t n = code.n();
    std::vector<std::uint64_t> gens;
    for (const auto &g : code.generators()) gens.push_back(pack(g));
    std::size_t stab_rank = rank_of(gens);

    // All Paulis of weight <= t, by brute force over 4^n.
    std::vector<std::uint64_t> errors;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << (2 * n)); ++v) {
        std::uint64_t support = (v | (v >> n)) & ((std::uint64_t{1} << n) - 1);
        if (static_cast<std::size_t>(std::popcount(support)) <= t) errors.push_back(v);
    }
    auto syndrome_of = [&](std::uint64_t e) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (anticommute(e, gens[i], n)) s |= std::uint64_t{1} << i;
        return s;
    };
    std::size_t need = list_length + 1;
    for (std::size_t base = 0; base < errors.size(); ++base) {
        std::vector<std::uint64_t> diffs;
        for (std::size_t j = 0; j < errors.size(); ++j) {
            if (j != base && syndrome_of(errors[j]) == syndrome_of(errors[base])) diffs.push_back(errors[j] ^ errors[base]);
        }
        // Search subsets of size L + 1 for one that is independent modulo S.
        std::vector<std::size_t> pick;
        auto search = [&](auto &&self, std::size_t from) -> bool {
            if (pick.size() == need) {
                std::vector<std::uint64_t> all = gens;
                for (auto i : pick) all.push_back(diffs[i]);
                return rank_of(all) == stab_rank + need;
            }
            for (std::size_t i = from; i < diffs.size(); ++i) {
                pick.push_back(i);
                if (self(self, i + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (search(search, 0)) return true;
    }
    return false;
}

// Ordered tuples of n - k independent, pairwise commuting Paulis (mod phase).
inline std::uint64_t count_generating_sets(std::size_t n, std::size_t k) {
    std::size_t r = n - k;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> tuple;
    auto extend = [&](auto &&self) -> void {
        if (tuple.size() == r) {
            ++total;
            return;
        }
        for (std::uint64_t v = 1; v < (std::uint64_t{1} << (2 * n)); ++v) {
            bool ok = true;
            for (auto g : tuple) ok = ok && !anticommute(v, g, n);
            if (!ok || span_of(tuple).count(v)) continue;
            tuple.push_back(v);
            self(self);
            tuple.pop_back();
        }
    };
    extend(extend);
    return total;
}

// prod_{a=0}^{n-k-1} (2^{2n-a} - 2^a)
inline std::uint64_t generating_set_formula(std::size_t n, std::size_t k) {
    std::uint64_t out = 1;
    for (std::size_t a = 0; a < n - k; ++a) out *= (std::uint64_t{1} << (2 * n - a)) - (std::uint64_t{1} << a);
    return out;
}

// GF(2)[x] remainder of a by b.
inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    int db = 63 - std::countl_zero(b);
    while (a && 63 - std::countl_zero(a) >= db) a ^= b << ((63 - std::countl_zero(a)) - db);
    return a;
}

inline bool irreducible(std::uint64_t poly) {
    int degree = 63 - std::countl_zero(poly);
    for (std::uint64_t d = 2; d < (std::uint64_t{1} << (degree / 2 + 1)); ++d) {
        if (poly_mod(poly, d) == 0) return false;
    }
    return degree >= 1;
}

// max_{e != 0} |#even - #odd| / |A| by direct parity counting.
inline double bias(std::size_t m, const std::vector<std::uint64_t> &elements) {
    double worst = 0;
    for (std::uint64_t e = 1; e < (std::uint64_t{1} << m); ++e) {
        long long balance = 0;
        for (auto a : elements) balance += (std::popcount(e & a) & 1) ? -1 : 1;
        worst = std::max(worst, std::abs(static_cast<double>(balance)) / static_cast<double>(elements.size()));
    }
    return worst;
}

inline double binary_entropy(double p) {
    if (p <= 0 || p >= 1) return 0;
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

}  // namespace oracle

#endif

#include "qlist/biased.h"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qlist/bounds.h"

namespace qlist {

namespace {

constexpr std::size_t kMaxExhaustiveLength = 24;

// Low-weight irreducible polynomials, index = degree.
constexpr std::uint64_t kFieldPolynomials[17] = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11D,
    0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

// In-place Walsh-Hadamard transform; afterwards v[e] = sum_a w_a (-1)^{e.a}.
void walsh_hadamard(std::vector<double> &v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                double a = v[j];
                double b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::uint64_t BiasedSet::key_bits() const { return ceil_log2(elements.size()); }

std::uint64_t field_polynomial(unsigned ell) {
    if (ell < 1 || ell > 16) throw std::domain_error("field_polynomial: degree must lie in [1, 16]");
    return kFieldPolynomials[ell];
}

std::uint64_t field_mul(std::uint64_t a, std::uint64_t b, unsigned ell, std::uint64_t polynomial) {
    std::uint64_t result = 0;
    std::uint64_t top = std::uint64_t{1} << ell;
    while (b) {
        if (b & 1) result ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= polynomial;
    }
    return result;
}

BiasedSet aghp(std::size_t m, unsigned ell) {
    if (ell < 1 || ell > 16) throw std::domain_error("aghp: ell must lie in [1, 16]");
    std::uint64_t field_size = std::uint64_t{1} << ell;
    if (m < 1 || m > field_size) throw std::domain_error("aghp: need 1 <= m <= 2^ell");
    BiasedSet set;
    set.m = m;
    set.ell = ell;
    set.polynomial = field_polynomial(ell);
    set.bias_bound = static_cast<double>(m - 1) / static_cast<double>(field_size);
    set.elements.reserve(field_size * field_size);
    std::vector<std::uint64_t> powers(m);
    for (std::uint64_t x = 0; x < field_size; ++x) {
        std::uint64_t p = 1;
        for (std::size_t i = 0; i < m; ++i) {
            powers[i] = p;
            p = field_mul(p, x, ell, set.polynomial);
        }
        for (std::uint64_t y = 0; y < field_size; ++y) {
            BitVec v(m);
            for (std::size_t i = 0; i < m; ++i) {
                if (std::popcount(powers[i] & y) & 1) v.flip(i);
            }
            set.elements.push_back(std::move(v));
        }
    }
    return set;
}

BiasedSet full_space(std::size_t m) {
    if (m > kMaxExhaustiveLength) throw std::domain_error("full_space: length too large");
    BiasedSet set;
    set.m = m;
    set.bias_bound = 0.0;
    set.elements.reserve(std::size_t{1} << m);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) set.elements.push_back(BitVec::from_uint(v, m));
    return set;
}

unsigned choose_ell(std::size_t m, double eta) {
    if (!(eta > 0)) throw std::domain_error("choose_ell: eta must be positive");
    for (unsigned ell = 1; ell <= 16; ++ell) {
        double bound = static_cast<double>(m == 0 ? 0 : m - 1) / std::exp2(ell);
        if (bound <= eta && m <= (std::size_t{1} << ell)) return ell;
    }
    throw std::domain_error("choose_ell: no field degree up to 16 reaches the target bias");
}

BiasedSet build_biased(std::size_t m, double eta) {
    if (m == 0) throw std::domain_error("build_biased: length must be positive");
    unsigned ell = choose_ell(m, eta);
    if (m <= 2 * ell) return full_space(m);
    return aghp(m, ell);
}

double weighted_bias(std::size_t m, const std::vector<BitVec> &vectors, const std::vector<double> &weights) {
    if (m > kMaxExhaustiveLength) throw std::domain_error("exhaustive bias measurement limited to m <= 24");
    if (m == 0) return 0.0;
    std::vector<double> spectrum(std::size_t{1} << m, 0.0);
    double total = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        spectrum[vectors[i].to_uint()] += weights[i];
        total += weights[i];
    }
    walsh_hadamard(spectrum);
    double worst = 0;
    for (std::size_t e = 1; e < spectrum.size(); ++e) worst = std::max(worst, std::abs(spectrum[e]));
    return worst / total;
}

double measure_bias(const BiasedSet &set) {
    return weighted_bias(set.m, set.elements, std::vector<double>(set.elements.size(), 1.0));
}

void certify(BiasedSet &set) { set.bias_exact = measure_bias(set); }

double measure_bias_sampled(const BiasedSet &set, std::size_t samples, Rng &rng) {
    double worst = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        BitVec e;
        do {
            e = random_bits(rng, set.m);
        } while (e.none());
        long long balance = 0;
        for (const auto &a : set.elements) balance += e.dot(a) ? -1 : 1;
        worst = std::max(worst, std::abs(static_cast<double>(balance)) / static_cast<double>(set.size()));
    }
    return worst;
}

std::size_t draw_index(const BiasedSet &set, const BitVec &key) {
    if (set.elements.empty()) throw std::invalid_argument("draw from an empty set");
    if (key.size() != set.key_bits()) {
        throw std::invalid_argument(
            "draw: key has " + std::to_string(key.size()) + " bits, set needs " + std::to_string(set.key_bits()));
    }
    return static_cast<std::size_t>(key.to_uint() % set.size());
}

const BitVec &draw(const BiasedSet &set, const BitVec &key) { return set.elements[draw_index(set, key)]; }

std::vector<std::uint64_t> draw_weights(const BiasedSet &set) {
    std::uint64_t keys = std::uint64_t{1} << set.key_bits();
    std::uint64_t size = set.size();
    std::vector<std::uint64_t> weights(size, keys / size);
    for (std::uint64_t i = 0; i < keys % size; ++i) ++weights[i];
    return weights;
}

double wrap_excess(const BiasedSet &set) {
    std::uint64_t keys = std::uint64_t{1} << set.key_bits();
    double uniform = 1.0 / static_cast<double>(set.size());
    double l1 = 0;
    for (auto w : draw_weights(set)) l1 += std::abs(static_cast<double>(w) / static_cast<double>(keys) - uniform);
    return l1;
}

double effective_bias(const BiasedSet &set) { return std::min(1.0, set.bias_bound + wrap_excess(set)); }

double measure_draw_bias(const BiasedSet &set) {
    auto counts = draw_weights(set);
    return weighted_bias(set.m, set.elements, std::vector<double>(counts.begin(), counts.end()));
}

std::string write_biased(const BiasedSet &set) {
    std::ostringstream out;
    out << "# qlist-biased v1\n";
    out << "m " << set.m << '\n';
    out << "ell " << set.ell << '\n';
    out << "polynomial " << std::hex << set.polynomial << std::dec << '\n';
    out << "bias_bound " << format_double(set.bias_bound) << '\n';
    out << "size " << set.size() << '\n';
    for (const auto &e : set.elements) out << e.hex() << '\n';
    return out.str();
}

BiasedSet read_biased(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "# qlist-biased v1") throw std::invalid_argument("not a qlist-biased v1 file");
    BiasedSet set;
    std::size_t size = 0;
    auto field = [&](const char *name) {
        if (!std::getline(in, line)) throw std::invalid_argument(std::string("missing field ") + name);
        std::istringstream fs(line);
        std::string key;
        std::string value;
        if (!(fs >> key >> value) || key != name) throw std::invalid_argument("expected field '" + std::string(name) + "'");
        return value;
    };
    set.m = std::stoull(field("m"));
    set.ell = static_cast<unsigned>(std::stoul(field("ell")));
    set.polynomial = std::stoull(field("polynomial"), nullptr, 16);
    set.bias_bound = std::stod(field("bias_bound"));
    size = std::stoull(field("size"));
    set.elements.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("biased set truncated");
        set.elements.push_back(BitVec::from_hex(line, set.m));
    }
    return set;
}

}  // namespace qlist

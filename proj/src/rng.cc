#include "qlist/rng.h"

#include <stdexcept>

namespace qlist {

Rng trial_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    if ((bound & (bound - 1)) == 0) return rng() & (bound - 1);
    // Largest multiple of bound that fits; values at or above it are redrawn.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

double uniform_unit(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

BitVec random_bits(Rng &rng, std::size_t len) {
    BitVec v(len);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if ((i & 63) == 0) word = rng();
        if ((word >> (i & 63)) & 1) v.flip(i);
    }
    return v;
}

}  // namespace qlist

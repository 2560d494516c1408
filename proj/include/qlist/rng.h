#ifndef QLIST_RNG_H
#define QLIST_RNG_H

#include <cstdint>
#include <random>

#include "qlist/gf2.h"

namespace qlist {

// mt19937_64 and seed_seq are fully specified by the standard, so every
// stream below is identical across platforms. Distribution objects are not,
// which is why the helpers work from raw engine output.
using Rng = std::mt19937_64;

/// Independent stream for (seed, index, stream). Trial i of a Monte Carlo run
/// always sees the same randomness regardless of scheduling.
Rng trial_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0);

/// Uniform integer in [0, bound), bound >= 1, by rejection on raw output.
std::uint64_t uniform_below(Rng &rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng &rng);

BitVec random_bits(Rng &rng, std::size_t len);

}  // namespace qlist

#endif

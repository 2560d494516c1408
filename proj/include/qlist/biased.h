#ifndef QLIST_BIASED_H
#define QLIST_BIASED_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlist/gf2.h"
#include "qlist/rng.h"

namespace qlist {

/// A multiset A of m-bit vectors with a certified bound on
/// max_{e != 0} |Pr_a(e.a = 0) - Pr_a(e.a = 1)|.
struct BiasedSet {
    std::size_t m = 0;
    /// Field degree of the power construction; 0 for the full space or an
    /// explicit element list.
    unsigned ell = 0;
    /// Reduction polynomial of GF(2^ell), bit i = coefficient of x^i; 0 if unused.
    std::uint64_t polynomial = 0;
    double bias_bound = 1.0;
    std::optional<double> bias_exact;
    std::vector<BitVec> elements;

    std::size_t size() const { return elements.size(); }
    /// Key bits consumed by one draw, ceil(log2 size()).
    std::uint64_t key_bits() const;
};

/// Fixed irreducible polynomial of degree ell for 1 <= ell <= 16.
std::uint64_t field_polynomial(unsigned ell);

/// Multiplication in GF(2^ell) modulo `polynomial`.
std::uint64_t field_mul(std::uint64_t a, std::uint64_t b, unsigned ell, std::uint64_t polynomial);

/// Power construction over GF(2^ell): the element with index x * 2^ell + y
/// has bit i = <x^i, y>, the GF(2) inner product of the coordinate vectors.
/// 2^{2 ell} elements, bias at most (m - 1) / 2^ell. Requires
/// 1 <= ell <= 16 and 1 <= m <= 2^ell.
BiasedSet aghp(std::size_t m, unsigned ell);

/// All 2^m vectors in increasing integer order; bias exactly 0. m <= 24.
BiasedSet full_space(std::size_t m);

/// Smallest ell with (m - 1) / 2^ell <= eta.
unsigned choose_ell(std::size_t m, double eta);

/// Set of length m with bias at most eta and the fewest elements of the two
/// constructions: the full space when m <= 2 ell, the power construction
/// otherwise.
BiasedSet build_biased(std::size_t m, double eta);

/// Exact bias over all 2^m - 1 nonzero functionals (m <= 24). Records the
/// result in set.bias_exact when called on a mutable set via certify().
double measure_bias(const BiasedSet &set);
void certify(BiasedSet &set);

/// Largest bias seen over `samples` uniformly random nonzero functionals; a
/// lower estimate of the true bias for long sets.
double measure_bias_sampled(const BiasedSet &set, std::size_t samples, Rng &rng);

/// Element index selected by a key of exactly key_bits() bits, read as a
/// little-endian integer; indices past the end wrap modulo size().
std::size_t draw_index(const BiasedSet &set, const BitVec &key);
const BitVec &draw(const BiasedSet &set, const BitVec &key);

/// Number of keys that select each element.
std::vector<std::uint64_t> draw_weights(const BiasedSet &set);

/// L1 distance between the key-induced draw distribution and the uniform
/// distribution on elements. Zero when size() is a power of two.
double wrap_excess(const BiasedSet &set);

/// bias_bound + wrap_excess: certified bias of an actual draw.
double effective_bias(const BiasedSet &set);

/// Exact bias of the key-induced draw distribution (m <= 24).
double measure_draw_bias(const BiasedSet &set);

/// Bias of an arbitrary weighting of m-bit vectors given as (vector, weight).
double weighted_bias(std::size_t m, const std::vector<BitVec> &vectors, const std::vector<double> &weights);

/// Text export: header (m, ell, polynomial, bias_bound, size) then one hex row
/// per element.
std::string write_biased(const BiasedSet &set);
BiasedSet read_biased(std::string_view text);

}  // namespace qlist

#endif

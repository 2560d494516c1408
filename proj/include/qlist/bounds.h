#ifndef QLIST_BOUNDS_H
#define QLIST_BOUNDS_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qlist {

// Closed-form rates and key budgets. All logarithms are base 2.

/// Binary entropy, H(0) = H(1) = 0.
double binary_entropy(double p);

struct RatePoint {
    double p = 0;
    double value = 0;  // max(0, raw)
    double raw = 0;
};

/// 1 - (1 + 1/L)(H(p) + p log 3); nullopt list length means L = infinity.
/// Domain 0 <= p <= 1/2, L >= 1.
RatePoint list_rate(double p, std::optional<unsigned> list_length = std::nullopt);

/// Quantum Gilbert-Varshamov rate 1 - H(2p) - 2p log 3, domain 0 <= p <= 1/4.
RatePoint gv_rate(double p);

/// Error fraction at which list_rate(., infinity) reaches zero.
double list_rate_zero_crossing();

/// (3 - sqrt 3) / 8: no code transmits a qubit exactly at or above this fraction.
double rains_threshold();
/// Largest possible distance n (3 - sqrt 3) / 4.
double rains_distance(double n);

/// ceil((2L + log(1/eps)) / log(4/3)), 0 < eps < 1/2.
std::uint64_t k_of(unsigned list_length, double epsilon);

/// 2^{2L} ((1 + eta)/2)^K, uncapped; values >= 1 are vacuous.
double failure_bound(unsigned list_length, double eta, std::uint64_t extra_generators);

struct KeyBudget {
    std::uint64_t extra_generators = 0;
    double eta = 0;
    /// Sum of ceil(log2 |A_j|) over the sets actually used.
    std::uint64_t key_bits = 0;
    /// K log2(n^2 / eta), the asymptotic envelope (without its constant).
    double envelope_bits = 0;
};

/// `set_sizes` are the biased-set cardinalities |A_1|..|A_K|.
KeyBudget key_bits(std::size_t n, double eta, std::span<const std::uint64_t> set_sizes);

/// ceil(log2 size) for size >= 1.
std::uint64_t ceil_log2(std::uint64_t size);

}  // namespace qlist

#endif

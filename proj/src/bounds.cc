#include "qlist/bounds.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qlist {

namespace {

const double kLog2Of3 = std::log2(3.0);

void require_range(double p, double lo, double hi, const char *what) {
    if (!(p >= lo && p <= hi)) {
        throw std::domain_error(std::string(what) + ": p = " + std::to_string(p) + " outside [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]");
    }
}

RatePoint clamp(double p, double raw) { return RatePoint{p, raw > 0 ? raw : 0.0, raw}; }

}  // namespace

double binary_entropy(double p) {
    if (p <= 0 || p >= 1) return 0.0;
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

RatePoint list_rate(double p, std::optional<unsigned> list_length) {
    require_range(p, 0.0, 0.5, "list_rate");
    double cost = binary_entropy(p) + p * kLog2Of3;
    if (list_length) {
        if (*list_length == 0) throw std::domain_error("list_rate: list length must be at least 1");
        cost *= 1.0 + 1.0 / static_cast<double>(*list_length);
    }
    return clamp(p, 1.0 - cost);
}

RatePoint gv_rate(double p) {
    require_range(p, 0.0, 0.25, "gv_rate");
    return clamp(p, 1.0 - binary_entropy(2 * p) - 2 * p * kLog2Of3);
}

double list_rate_zero_crossing() {
    // The raw rate is strictly decreasing on (0, 1/2): bisect to machine precision.
    double lo = 0.0;
    double hi = 0.5;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        double mid = 0.5 * (lo + hi);
        (list_rate(mid).raw > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double rains_threshold() { return (3.0 - std::sqrt(3.0)) / 8.0; }

double rains_distance(double n) { return n * (3.0 - std::sqrt(3.0)) / 4.0; }

std::uint64_t k_of(unsigned list_length, double epsilon) {
    if (!(epsilon > 0 && epsilon < 0.5)) throw std::domain_error("k_of: epsilon must lie in (0, 1/2)");
    double k = (2.0 * list_length + std::log2(1.0 / epsilon)) / std::log2(4.0 / 3.0);
    return static_cast<std::uint64_t>(std::ceil(k));
}

double failure_bound(unsigned list_length, double eta, std::uint64_t extra_generators) {
    if (!(eta >= 0 && eta <= 1)) throw std::domain_error("failure_bound: eta must lie in [0, 1]");
    return std::exp2(2.0 * list_length) * std::pow((1.0 + eta) / 2.0, static_cast<double>(extra_generators));
}

std::uint64_t ceil_log2(std::uint64_t size) {
    if (size == 0) throw std::domain_error("ceil_log2: size must be positive");
    return size == 1 ? 0 : std::bit_width(size - 1);
}

KeyBudget key_bits(std::size_t n, double eta, std::span<const std::uint64_t> set_sizes) {
    KeyBudget budget;
    budget.extra_generators = set_sizes.size();
    budget.eta = eta;
    for (auto size : set_sizes) budget.key_bits += ceil_log2(size);
    if (eta > 0 && n > 0) {
        budget.envelope_bits =
            static_cast<double>(set_sizes.size()) * std::log2(static_cast<double>(n) * static_cast<double>(n) / eta);
    }
    return budget;
}

}  // namespace qlist

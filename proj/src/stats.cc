#include "qlist/stats.h"

#include <algorithm>
#include <cmath>

namespace qlist {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double binomial_sigma(double p, std::uint64_t trials) {
    if (trials == 0) return 1.0;
    return std::sqrt(std::max(0.0, p * (1 - p)) / static_cast<double>(trials));
}

}  // namespace qlist

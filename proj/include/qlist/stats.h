#ifndef QLIST_STATS_H
#define QLIST_STATS_H

#include <cstdint>

namespace qlist {

struct Interval {
    double lo = 0;
    double hi = 0;
};

/// Wilson score interval for `successes` out of `trials` at normal quantile z.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

/// Standard error sqrt(p(1-p)/trials) of a binomial proportion.
double binomial_sigma(double p, std::uint64_t trials);

}  // namespace qlist

#endif

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace mcps::harness {

struct Interval {
    double p = 0.0;
    double half_width = 0.0;
};

inline double ci_half_width(double p, std::int64_t games) {
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(games));
}

// 95% normal-approximation interval, the convention behind win-rate tables
// written as "p ± h".
inline Interval confidence_interval(std::int64_t successes, std::int64_t games) {
    if (games <= 0) throw std::invalid_argument("confidence_interval: games must be > 0");
    const double p = static_cast<double>(successes) / static_cast<double>(games);
    return {p, ci_half_width(p, games)};
}

}  // namespace mcps::harness

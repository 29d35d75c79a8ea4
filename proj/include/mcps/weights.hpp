#pragma once

#include <cstdint>

#include "mcps/types.hpp"

namespace mcps {

// Value assigned to a move whose every statistic is empty, so that untried
// moves are sampled before re-sampling tried moves with a lower mean.
inline constexpr double kFirstPlayUrgency = 1.0;

// GRAVE mixing coefficient for the AMAF term:
//   beta = an / (an + n + bias * an * n)
// with an the AMAF count at the reference ancestor and n the move count at the
// node. Callers handle an == n == 0 separately (first-play urgency).
inline double grave_beta(std::int64_t amaf_n, std::int64_t n, double bias) {
    const double an = static_cast<double>(amaf_n);
    const double nn = static_cast<double>(n);
    return an / (an + nn + bias * an * nn);
}

// Weights for the three statistics sources. With an > 0 these are the
// variance-derived weights rescaled so that alpha stays at the RAVE-style
// n / (n + an) blend regardless of the permutation count:
//   c1 = (an + pn) / an
//   alpha = c1*n / (c1*n + an + pn)   == n / (n + an)
//   beta  = an   / (c1*n + an + pn)   == (an / (n + an)) * (an / (an + pn))
//   gamma = pn   / (c1*n + an + pn)   == (an / (n + an)) * (pn / (an + pn))
// The right-hand forms are used: they are algebraically identical, keep the
// alpha identity exact in floating point, and never divide by an == 0.
// Degenerate counts fall back to the continuous limits: an == 0 gives all
// weight to the only populated source; all-zero returns zero weights and the
// caller applies first-play urgency.
inline Weights mcps_weights(std::int64_t n, std::int64_t amaf_n, std::int64_t perm_n) {
    if (amaf_n <= 0) {
        if (n > 0) return {1.0, 0.0, 0.0};
        if (perm_n > 0) return {0.0, 0.0, 1.0};
        return {0.0, 0.0, 0.0};
    }
    const double nn = static_cast<double>(n);
    const double an = static_cast<double>(amaf_n);
    const double pn = static_cast<double>(perm_n);
    const double t = nn + an;
    const double u = an + pn;
    const double share = an / t;
    return {nn / t, share * (an / u), share * (pn / u)};
}

}  // namespace mcps

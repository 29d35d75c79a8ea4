#include <catch2/catch.hpp>

#include "mcps/rng.hpp"
#include "mcps/weights.hpp"

using namespace mcps;

namespace {

// Reference route: the mixing weights computed literally through the c1
// correction factor, in extended precision.
Weights boxed_weights(std::int64_t n, std::int64_t amaf_n, std::int64_t perm_n) {
    const long double nn = n;
    const long double an = amaf_n;
    const long double pn = perm_n;
    const long double c1 = (an + pn) / an;
    const long double den = c1 * nn + an + pn;
    return {static_cast<double>(c1 * nn / den), static_cast<double>(an / den),
            static_cast<double>(pn / den)};
}

}  // namespace

TEST_CASE("grave_beta boundary and midpoint values") {
    CHECK(grave_beta(0, 5, 1e-5) == 0.0);
    CHECK(grave_beta(5, 0, 1e-5) == 1.0);
    CHECK(grave_beta(10, 10, 1e-5) == Approx(10.0 / (20.0 + 1e-3)).epsilon(1e-12));
    CHECK(grave_beta(10, 10, 1e-5) == Approx(0.49997).margin(1e-5));
}

TEST_CASE("grave_beta stays within [0,1]") {
    Xoshiro256 rng(11);
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t an = rng.below(1000000);
        const std::int64_t n = rng.below(1000000);
        if (an == 0 && n == 0) continue;
        const double b = grave_beta(an, n, 1e-5);
        CHECK(b >= 0.0);
        CHECK(b <= 1.0);
    }
}

TEST_CASE("mcps_weights worked examples") {
    SECTION("all three sources populated") {
        const Weights w = mcps_weights(10, 20, 40);
        CHECK(w.alpha == Approx(1.0 / 3.0).epsilon(1e-15));
        CHECK(w.beta == Approx(20.0 / 90.0).epsilon(1e-12));
        CHECK(w.gamma == Approx(40.0 / 90.0).epsilon(1e-12));
    }
    SECTION("no permutation statistics collapses to the RAVE blend") {
        const Weights w = mcps_weights(10, 20, 0);
        CHECK(w.alpha == Approx(10.0 / 30.0).epsilon(1e-15));
        CHECK(w.beta == Approx(20.0 / 30.0).epsilon(1e-15));
        CHECK(w.gamma == 0.0);
    }
    SECTION("only permutation statistics") {
        const Weights w = mcps_weights(0, 0, 7);
        CHECK(w.alpha == 0.0);
        CHECK(w.beta == 0.0);
        CHECK(w.gamma == 1.0);
        // consistent with the closed-form limit: with n = 0, gamma rises
        // toward 1 as the AMAF count vanishes
        double prev = 1.0;
        for (std::int64_t an : {1, 2, 4, 8, 16}) {
            const double gamma = mcps_weights(0, an, 7).gamma;
            CHECK(gamma == Approx(7.0 / (an + 7.0)).epsilon(1e-12));
            CHECK(gamma < prev);
            prev = gamma;
        }
    }
    SECTION("only move statistics") {
        const Weights w = mcps_weights(5, 0, 0);
        CHECK(w.alpha == 1.0);
        CHECK(w.beta == 0.0);
        CHECK(w.gamma == 0.0);
    }
    SECTION("move statistics with permutation but no AMAF") {
        const Weights w = mcps_weights(5, 0, 9);
        CHECK(w.alpha == 1.0);
        CHECK(w.gamma == 0.0);
    }
    SECTION("no information at all yields zero weights for the caller's FPU") {
        const Weights w = mcps_weights(0, 0, 0);
        CHECK(w.alpha == 0.0);
        CHECK(w.beta == 0.0);
        CHECK(w.gamma == 0.0);
    }
}

TEST_CASE("mcps_weights identities over random counts") {
    Xoshiro256 rng(2024);
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t n = rng.below(1000000);
        const std::int64_t an = 1 + rng.below(999999);
        const std::int64_t pn = rng.below(1000000);
        const Weights w = mcps_weights(n, an, pn);

        // alpha is exactly the RAVE-style blend.
        CHECK(w.alpha == static_cast<double>(n) / static_cast<double>(n + an));
        CHECK(std::abs(w.alpha + w.beta + w.gamma - 1.0) <= 1e-12);

        // Same numbers as the literal c1 formulas.
        const Weights b = boxed_weights(n, an, pn);
        CHECK(w.alpha == Approx(b.alpha).margin(1e-12));
        CHECK(w.beta == Approx(b.beta).margin(1e-12));
        CHECK(w.gamma == Approx(b.gamma).margin(1e-12));

        // beta/gamma stay in the AMAF:permutation count ratio.
        if (pn > 0 && w.gamma > 0.0)
            CHECK(w.beta / w.gamma ==
                  Approx(static_cast<double>(an) / static_cast<double>(pn)).epsilon(1e-12));

        // Closed forms of the two shared-denominator weights.
        const double t = static_cast<double>(n + an);
        const double u = static_cast<double>(an + pn);
        CHECK(w.beta == Approx(static_cast<double>(an) * static_cast<double>(an) / (t * u))
                            .margin(1e-12));
        CHECK(w.gamma == Approx(static_cast<double>(an) * static_cast<double>(pn) / (t * u))
                             .margin(1e-12));
    }
}

TEST_CASE("blended selection values from the mixing weights") {
    // counts (10, 20, 40), means (0.5, 0.6, 0.9)
    const Weights w = mcps_weights(10, 20, 40);
    CHECK(w.alpha * 0.5 + w.beta * 0.6 + w.gamma * 0.9 == Approx(0.7).epsilon(1e-12));

    // GRAVE with an empty reference falls back to the plain mean
    const double beta = grave_beta(0, 4, 1e-5);
    CHECK((1.0 - beta) * 0.75 + beta * 0.0 == 0.75);
}

TEST_CASE("mcps_weights with no permutation playouts equals grave_beta at bias zero") {
    Xoshiro256 rng(7);
    for (int i = 0; i < 5000; ++i) {
        const std::int64_t n = rng.below(100000);
        const std::int64_t an = 1 + rng.below(99999);
        const Weights w = mcps_weights(n, an, 0);
        CHECK(w.beta == grave_beta(an, n, 0.0));
        CHECK(w.gamma == 0.0);
    }
}

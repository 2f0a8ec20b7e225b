#include <gtest/gtest.h>

#include <cmath>

#include "casimir/bessel.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"

using namespace casimir;

namespace {

// Independent oracle: K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt,
// evaluated in scaled form e^{-x(cosh t - 1)} so it works for large x too.
double bessel_k_by_quadrature_scaled(int nu, double x) {
    auto f = [nu, x](double t) {
        const double e = x * (std::cosh(t) - 1.0);
        if (e > 745.0) return 0.0;
        return std::exp(-e) * std::cosh(nu * t);
    };
    const double support = std::acosh(1.0 + 45.0 / x);
    return integrate_semi_infinite(f, 0.0, Tolerance{1e-13, 1e-280}, support).value;
}

} // namespace

TEST(Bessel, ReferencePoints) {
    // 30-digit reference values for the integral representation.
    EXPECT_NEAR(bessel_k(0, 1.0) / 0.421024438240708333356, 1.0, 1e-12);
    EXPECT_NEAR(bessel_k(1, 1.0) / 0.601907230197234574738, 1.0, 1e-12);
    EXPECT_NEAR(bessel_k(2, 1.0) / 1.624838898635177482811, 1.0, 1e-12);
    EXPECT_NEAR(bessel_k(0, 20.0) / 5.741237815336524292717e-10, 1.0, 1e-12);
    EXPECT_NEAR(bessel_k_scaled(0, 1.0) / 1.144463079806895014699, 1.0, 1e-12);
    EXPECT_NEAR(bessel_k_scaled(0, 100.0) / 0.125175621659126578892, 1.0, 1e-12);
}

TEST(Bessel, MatchesIntegralRepresentation) {
    // 20 log-spaced points across [1e-3, 1e3].
    for (int i = 0; i < 20; ++i) {
        const double x = std::pow(10.0, -3.0 + 6.0 * i / 19.0);
        const double ex = std::exp(std::min(x, 700.0));
        for (int nu = 0; nu <= 2; ++nu) {
            const double ref = bessel_k_by_quadrature_scaled(nu, x);
            EXPECT_NEAR(bessel_k_scaled(nu, x) / ref, 1.0, 1e-10)
                << "nu=" << nu << " x=" << x;
            if (x < 650.0)
                EXPECT_NEAR(bessel_k(nu, x) * ex / ref, 1.0, 1e-10)
                    << "nu=" << nu << " x=" << x;
        }
    }
}

TEST(Bessel, AgreesWithStandardLibrary) {
    // std::cyl_bessel_k is a third, independently coded implementation.
    for (int i = 0; i <= 24; ++i) {
        const double x = std::pow(10.0, -2.0 + 3.5 * i / 24.0); // [1e-2, ~31.6]
        for (int nu = 0; nu <= 2; ++nu)
            EXPECT_NEAR(bessel_k(nu, x) / std::cyl_bessel_k(double(nu), x), 1.0, 1e-11)
                << "nu=" << nu << " x=" << x;
    }
}

TEST(Bessel, RecurrenceIdentity) {
    // K2 = K0 + 2 K1 / x on a log grid.
    for (int i = 0; i <= 60; ++i) {
        const double x = std::pow(10.0, -3.0 + 6.0 * i / 60.0);
        const double lhs = bessel_k_scaled(2, x);
        const double rhs = bessel_k_scaled(0, x) + 2.0 * bessel_k_scaled(1, x) / x;
        EXPECT_NEAR(lhs / rhs, 1.0, 1e-10) << "x=" << x;
    }
    for (double x : {0.5, 1.0, 5.0, 20.0}) {
        EXPECT_NEAR(bessel_k(2, x) / (bessel_k(0, x) + 2.0 * bessel_k(1, x) / x), 1.0, 1e-12);
    }
}

TEST(Bessel, StrictlyDecreasing) {
    for (int nu = 0; nu <= 2; ++nu) {
        double prev = bessel_k_scaled(nu, 1e-3) * std::exp(-1e-3);
        for (int i = 1; i <= 80; ++i) {
            const double x = std::pow(10.0, -3.0 + 5.5 * i / 80.0);
            const double cur = bessel_k(nu, std::min(x, 600.0));
            EXPECT_LT(cur, prev) << "nu=" << nu << " x=" << x;
            prev = cur;
        }
    }
}

TEST(Bessel, ScaledConsistencyAndAsymptote) {
    EXPECT_NEAR(bessel_k_scaled(1, 3.0) * std::exp(-3.0) / bessel_k(1, 3.0), 1.0, 1e-12);
    // sqrt(2x/pi) e^x K_nu(x) -> 1, within 1% from x = 50 up.
    for (double x : {50.0, 200.0, 1e3, 1e4}) {
        for (int nu = 0; nu <= 1; ++nu) {
            const double v = bessel_k_scaled(nu, x) * std::sqrt(2.0 * x / pi);
            EXPECT_NEAR(v, 1.0, 0.01) << "nu=" << nu << " x=" << x;
        }
    }
    // remains finite and positive out to 1e4 (reference value to 1e-12)
    EXPECT_NEAR(bessel_k_scaled(1, 1e4) / 0.0125336113512705057339, 1.0, 1e-12);
}

TEST(Bessel, NoPrematureUnderflow) {
    // e^-x underflows near x = 745; just below, the unscaled value is still
    // a faithful product of exp(-x) and the scaled value.
    const double x = 700.0;
    EXPECT_GT(bessel_k(0, x), 0.0);
    EXPECT_NEAR(bessel_k(0, x) / (std::exp(-x) * bessel_k_scaled(0, x)), 1.0, 1e-12);
}

TEST(Bessel, DomainErrors) {
    EXPECT_THROW(bessel_k(0, 0.0), DomainError);
    EXPECT_THROW(bessel_k(1, -1.0), DomainError);
    EXPECT_THROW(bessel_k(3, 1.0), DomainError);
    EXPECT_THROW(bessel_k(-1, 1.0), DomainError);
    EXPECT_THROW(bessel_k_scaled(0, std::nan("")), DomainError);
}

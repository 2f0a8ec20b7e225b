#pragma once

#include <cmath>
#include <limits>

#include "casimir/errors.hpp"

// Modified Bessel functions of the second kind K0, K1, K2 and their
// exponentially scaled variants e^x K_nu(x). Only these three integer
// orders are provided.
//
// Scheme: ascending log series (DLMF 10.31) for x < 2, Temme-style
// continued fraction (Thompson & Barnett, J. Comput. Phys. 64, 1986) for
// x >= 2, K2 by the upward recurrence K2 = K0 + 2 K1 / x.

namespace casimir {

namespace detail {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// K0, K1 on (0, 2) from the ascending series
//   K0 = -(log(x/2)+gamma) I0 + sum_{k>=1} c_k x^{2k} H_k
//   K1 = I0/x + (log(x/2)+gamma) I1 - sum_{k>=1} 2k c_k H_k x^{2k-1}
// with c_k = 1/(4^k (k!)^2), H_k the harmonic numbers. The K1 line follows
// from K1 = -dK0/dx.
inline void k01_series(double x, double& k0, double& k1) {
    const double t = 0.25 * x * x;
    const double lg = std::log(0.5 * x) + euler_gamma;

    double term = 1.0;  // c_k x^{2k}
    double i0 = 1.0;
    double s0 = 0.0;    // sum c_k x^{2k} H_k
    double s1 = 0.0;    // sum 2k c_k x^{2k-1} H_k
    double h = 0.0;
    double i1term = 1.0; // (x/2)^{2k} / (k! (k+1)!)
    double i1sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        term *= t / (static_cast<double>(k) * k);
        h += 1.0 / k;
        i0 += term;
        s0 += term * h;
        s1 += term * h * (2.0 * k) / x;
        i1term *= t / (static_cast<double>(k) * (k + 1));
        i1sum += i1term;
        if (term < 1e-18 * i0 && i1term < 1e-18 * i1sum) break;
    }
    const double i1 = 0.5 * x * i1sum;
    k0 = -lg * i0 + s0;
    k1 = i0 / x + lg * i1 - s1;
}

// Scaled e^x K0(x), e^x K1(x) for x >= 2 via the CF2 continued fraction
// evaluated with the Thompson-Barnett q-sequence.
inline void k01_scaled_cf(double x, double& k0e, double& k1e) {
    constexpr double pi = 3.141592653589793238462643383279502884;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    const double a1 = 0.25; // 1/4 - nu^2 at nu = 0
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 30000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels) <= eps * std::fabs(s)) break;
    }
    h = a1 * h;
    k0e = std::sqrt(pi / (2.0 * x)) / s;
    k1e = k0e * (0.5 + x - h) / x;
}

inline void k01_scaled(double x, double& k0e, double& k1e) {
    if (x < 2.0) {
        double k0, k1;
        k01_series(x, k0, k1);
        const double ex = std::exp(x);
        k0e = ex * k0;
        k1e = ex * k1;
    } else {
        k01_scaled_cf(x, k0e, k1e);
    }
}

inline void check_bessel_args(int order, double x) {
    if (order < 0 || order > 2)
        throw DomainError("bessel_k: order must be 0, 1 or 2");
    if (!(std::isfinite(x) && x > 0.0))
        throw DomainError("bessel_k: x must be positive (K diverges at 0)");
}

} // namespace detail

/// e^x K_order(x); stays finite and accurate for large x (tested to 1e4+).
inline double bessel_k_scaled(int order, double x) {
    detail::check_bessel_args(order, x);
    double k0e, k1e;
    detail::k01_scaled(x, k0e, k1e);
    switch (order) {
        case 0: return k0e;
        case 1: return k1e;
        default: return k0e + 2.0 * k1e / x;
    }
}

/// K_order(x). For large x this is e^{-x} times the scaled value, so it
/// underflows to 0 only where the true value leaves the double range.
inline double bessel_k(int order, double x) {
    detail::check_bessel_args(order, x);
    if (x < 2.0) {
        double k0, k1;
        detail::k01_series(x, k0, k1);
        switch (order) {
            case 0: return k0;
            case 1: return k1;
            default: return k0 + 2.0 * k1 / x;
        }
    }
    return std::exp(-x) * bessel_k_scaled(order, x);
}

} // namespace casimir

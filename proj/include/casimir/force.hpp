#pragma once

#include <cmath>
#include <string>

#include "casimir/bessel.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"

// Mass-dependent Casimir force and renormalized vacuum energy per unit
// area between parallel plates, for a neutral scalar species of mass m.
//
// Everything reduces to dimensionless one-variable integrals in
// x0 = 2*a*m:
//
//   J(mu) = int_mu^inf dy [ mu^2/((e^y-1) sqrt(y^2-mu^2))
//                           + sqrt(y^2-mu^2)/(e^y-1) ]
//         = int_0^inf dt mu^2 cosh^2 t / (e^{mu cosh t} - 1)      (y = mu cosh t)
//
//   G(x0) = int_{x0}^inf u J(u) du,      F(a,m) = -G(2am) / (16 pi^2 a^4)
//
//   H(mu) = int_mu^inf dy sqrt(y^2-mu^2)/(e^y-1)
//         = int_0^inf dt mu^2 sinh^2 t / (e^{mu cosh t} - 1)
//
//   E(a,m)/S = -(1/(16 pi^2 a^3)) int_{x0}^inf u H(u) du
//
// The mode sum runs over n in (-inf, inf), so the massless limit is the
// two-polarization value pi^2/(240 a^4). Attractive forces are negative;
// the CLI reports magnitudes with an explicit attraction note.

namespace casimir {

/// mu = 2a*sqrt(m^2 + kperp^2); reduces to x0 = 2am at kperp = 0.
struct DimensionlessGap {
    double mu;

    explicit DimensionlessGap(double v) : mu(v) {
        if (!(std::isfinite(v) && v >= 0.0))
            throw DomainError("dimensionless gap must be non-negative and finite");
    }
};

/// Dirichlet mode ladder between the plates; used by documentation tests.
struct ModeSpectrum {
    PlateSeparation a;
    ParticleMass m;

    double wavenumber(int n) const { return n * pi / a.value; }
    double omega(int n, double kperp) const {
        const double kn = wavenumber(n);
        return std::sqrt(m.value * m.value + kperp * kperp + kn * kn);
    }
};

enum class ForceMethod { reduced_integral, direct_2d, bessel_series, massless_closed_form };

inline const char* to_string(ForceMethod m) {
    switch (m) {
        case ForceMethod::reduced_integral: return "reduced-integral";
        case ForceMethod::direct_2d: return "direct-2d";
        case ForceMethod::bessel_series: return "bessel-series";
        default: return "massless-closed-form";
    }
}

struct ForceResult {
    ForcePerArea force;
    ForceMethod method;
    double error_estimate = 0.0;
    /// 2am > underflow_gap: |F| is below double range, value pinned to 0.
    bool underflow = false;
};

/// Beyond this value of 2am the exponentially suppressed force underflows;
/// operations return exact zero flagged as underflow.
inline constexpr double underflow_gap = 700.0;

/// Below this value of 2am the Bessel series delegates to the massless
/// closed form (relative difference O(x0^2) < 1e-9 there).
inline constexpr double series_min_gap = 1e-4;

namespace detail {

// mu^2 cosh^2 t / (e^{mu cosh t} - 1), overflow-hardened.
inline double j_integrand(double mu, double t) {
    double w;
    if (t > 705.0) {
        const double lw = std::log(0.5 * mu) + t; // log(mu cosh t) up to e^{-2t}
        if (!(lw <= 709.0)) return 0.0;
        w = std::exp(lw);
    } else {
        w = mu * std::cosh(t);
    }
    if (w > 705.0) return std::exp(2.0 * std::log(w) - w);
    if (w <= 0.0) return 0.0;
    return w * w / std::expm1(w);
}

// mu^2 sinh^2 t / (e^{mu cosh t} - 1), overflow-hardened.
inline double h_integrand(double mu, double t) {
    if (t > 705.0) return j_integrand(mu, t); // sinh == cosh to double precision
    const double w = mu * std::cosh(t);
    if (w <= 0.0) return 0.0;
    const double s = mu * std::sinh(t);
    if (w > 705.0) return (s > 0.0) ? std::exp(2.0 * std::log(s) - w) : 0.0;
    return s * s / std::expm1(w);
}

// Integration scale in t: e^{-mu cosh t} has dropped ~e^{-40} at t*.
// Capped so subnormal mu cannot push the map scale to infinity.
inline double cosh_support(double mu) {
    return std::acosh(1.0 + std::min(40.0 / mu, 1e300));
}

inline const Tolerance inner_tol{1e-12, 1e-280};

} // namespace detail

/// Inner integral J(mu) of the force reduction, evaluated in the
/// singularity-free cosh-substituted form. J(0) = pi^2/6 analytically.
inline double inner_j(DimensionlessGap gap, Tolerance tol = {}) {
    validate(tol);
    const double mu = gap.mu;
    if (mu == 0.0) return pi * pi / 6.0;
    auto f = [mu](double t) { return detail::j_integrand(mu, t); };
    return integrate_semi_infinite(f, 0.0, tol, detail::cosh_support(mu)).value;
}

/// Energy counterpart H(mu); H(0) = pi^2/6.
inline double inner_h(DimensionlessGap gap, Tolerance tol = {}) {
    validate(tol);
    const double mu = gap.mu;
    if (mu == 0.0) return pi * pi / 6.0;
    auto f = [mu](double t) { return detail::h_integrand(mu, t); };
    return integrate_semi_infinite(f, 0.0, tol, detail::cosh_support(mu)).value;
}

/// G(x0) = int_{x0}^inf u J(u) du. G(0) = pi^4/15.
inline QuadratureResult gap_force_integral(double x0, Tolerance tol = {}) {
    validate(tol);
    if (!(std::isfinite(x0) && x0 >= 0.0))
        throw DomainError("gap_force_integral: x0 must be non-negative");
    auto f = [](double u) {
        return u <= 0.0 ? 0.0 : u * inner_j(DimensionlessGap(u), detail::inner_tol);
    };
    return integrate_semi_infinite(f, x0, tol, 4.0);
}

/// int_{x0}^inf u H(u) du for the renormalized energy.
inline QuadratureResult gap_energy_integral(double x0, Tolerance tol = {}) {
    validate(tol);
    if (!(std::isfinite(x0) && x0 >= 0.0))
        throw DomainError("gap_energy_integral: x0 must be non-negative");
    auto f = [](double u) {
        return u <= 0.0 ? 0.0 : u * inner_h(DimensionlessGap(u), detail::inner_tol);
    };
    return integrate_semi_infinite(f, x0, tol, 4.0);
}

/// Massless closed form F(a, 0) = -pi^2/(240 a^4). No quadrature.
inline ForceResult massless_force(PlateSeparation a) {
    const double a2 = a.value * a.value;
    const double magnitude = pi * pi / (240.0 * a2 * a2);
    return {ForcePerArea(-magnitude), ForceMethod::massless_closed_form, 0.0, false};
}

/// Casimir force per unit area via the reduced one-dimensional integral
/// F = -G(2am)/(16 pi^2 a^4). Negative (attractive) for all valid inputs.
inline ForceResult force(PlateSeparation a, ParticleMass m, Tolerance tol = {}) {
    validate(tol);
    if (m.value == 0.0) return massless_force(a);
    const double x0 = 2.0 * a.value * m.value;
    if (x0 > underflow_gap)
        return {ForcePerArea(0.0), ForceMethod::reduced_integral, 0.0, true};

    const Tolerance outer{std::max(tol.rel, 1e-10), tol.abs};
    const QuadratureResult g = gap_force_integral(x0, outer);
    const double a2 = a.value * a.value;
    const double prefactor = 1.0 / (16.0 * pi * pi * a2 * a2);
    return {ForcePerArea(-g.value * prefactor), ForceMethod::reduced_integral,
            g.error_estimate * prefactor, false};
}

/// Literal nested evaluation of the force double integral
///   F = -(1/(4 pi^2 a^2)) int_0^inf k dk int_mu^inf dy [...]
/// with the integrable (y^2-mu^2)^{-1/2} endpoint left in place. Slower and
/// looser than force(); it exists to validate the reduction.
inline ForceResult force_direct(PlateSeparation a, ParticleMass m, Tolerance tol = {}) {
    validate(tol);
    const double av = a.value;
    const double mv = m.value;
    const double x0 = 2.0 * av * mv;
    if (x0 > underflow_gap)
        return {ForcePerArea(0.0), ForceMethod::direct_2d, 0.0, true};

    const Tolerance inner{1e-11, 1e-300};
    const Tolerance outer{std::max(tol.rel, 1e-9), tol.abs};

    auto outer_integrand = [av, mv, inner](double k) {
        const double mu = 2.0 * av * std::hypot(mv, k);
        auto inner_integrand = [mu](double d) { // d = y - mu > 0
            const double y = mu + d;
            const double s = std::sqrt(d * (2.0 * mu + d)); // sqrt(y^2 - mu^2)
            if (y > 705.0) return (s > 0.0) ? std::exp(std::log(mu * mu / s + s) - y) : 0.0;
            const double em = std::expm1(y);
            return mu * mu / (em * s) + s / em;
        };
        const double j = integrate_semi_infinite(inner_integrand, 0.0, inner, 3.0).value;
        return k * j;
    };

    const double scale_k = (2.0 + std::sqrt(x0)) / (2.0 * av);
    const QuadratureResult q = integrate_semi_infinite(outer_integrand, 0.0, outer, scale_k);
    const double prefactor = 1.0 / (4.0 * pi * pi * av * av);
    return {ForcePerArea(-q.value * prefactor), ForceMethod::direct_2d,
            q.error_estimate * prefactor, false};
}

/// Resummed form: |F| = (m^2 / 4 pi^2 a^2) sum_n [ (2ma/n) K1(2nma)
/// + (3/n^2) K2(2nma) ]. Truncated when a term falls below 1e-16 of the
/// partial sum; delegates to the massless closed form for 2am < 1e-4.
inline ForceResult force_bessel_series(PlateSeparation a, ParticleMass m) {
    if (m.value == 0.0) return massless_force(a);
    const double x0 = 2.0 * a.value * m.value;
    if (x0 > underflow_gap)
        return {ForcePerArea(0.0), ForceMethod::bessel_series, 0.0, true};
    if (x0 < series_min_gap) return massless_force(a);

    double sum = 0.0;
    double last = 0.0;
    constexpr int max_terms = 100000;
    for (int n = 1; n <= max_terms; ++n) {
        const double x = n * x0;
        if (x > 745.0) break;
        const double damp = std::exp(-x);
        if (damp == 0.0) break;
        const double term =
            damp * ((x0 / n) * bessel_k_scaled(1, x) + (3.0 / (n * n)) * bessel_k_scaled(2, x));
        sum += term;
        last = term;
        if (term < 1e-16 * sum) break;
    }
    const double a2 = a.value * a.value;
    const double prefactor = x0 * x0 / (16.0 * pi * pi * a2 * a2); // = m^2/(4 pi^2 a^2)
    const double magnitude = prefactor * sum;
    return {ForcePerArea(-magnitude), ForceMethod::bessel_series,
            prefactor * last + 1e-14 * magnitude, false};
}

/// Renormalized vacuum energy per unit area: the finite a-dependent part
///   E/S = -(1/(16 pi^2 a^3)) int_{2am}^inf u H(u) du.
/// The divergent a-independent pieces of the bare mode sum cancel from the
/// force and are excluded. -d(E/S)/da reproduces force(a, m).
inline EnergyPerArea energy_renormalized(PlateSeparation a, ParticleMass m, Tolerance tol = {}) {
    validate(tol);
    const double x0 = 2.0 * a.value * m.value;
    if (x0 > underflow_gap) return EnergyPerArea(0.0);
    const Tolerance outer{std::max(tol.rel, 1e-10), tol.abs};
    const QuadratureResult q = gap_energy_integral(x0, outer);
    const double a3 = a.value * a.value * a.value;
    return EnergyPerArea(-q.value / (16.0 * pi * pi * a3));
}

} // namespace casimir

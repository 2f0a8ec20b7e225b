#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "casimir/errors.hpp"

// Adaptive one-dimensional quadrature on finite and semi-infinite
// intervals. Globally adaptive Gauss-Kronrod 7/15 with deterministic
// worst-segment-first subdivision; semi-infinite ranges are folded onto
// [0,1) by the rational map y = lo + s*t/(1-t).
//
// Integrable endpoint singularities (e.g. (y-lo)^{-1/2}) converge through
// plain adaptivity: the Kronrod nodes never touch interval endpoints.

namespace casimir {

struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-30;
};

inline void validate(const Tolerance& tol) {
    if (!(tol.rel > 0.0 && tol.rel < 1.0 && std::isfinite(tol.rel)))
        throw DomainError("tolerance: rel must lie in (0, 1)");
    if (!(tol.abs > 0.0 && std::isfinite(tol.abs)))
        throw DomainError("tolerance: abs must be positive");
}

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
inline constexpr double gk15_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};

inline constexpr double gk15_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// Gauss weights for nodes 1, 3, 5, 7 of the table above.
inline constexpr double g7_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double lo;
    double hi;
    double value;
    double error;
};

template <class F>
Segment gk15(F& f, double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    double fv[15];
    double resk = 0.0, resg = 0.0, resabs = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = half * gk15_nodes[i];
        const double f1 = f(centre - dx);
        const double f2 = (i == 7) ? f1 : f(centre + dx);
        if (!(std::isfinite(f1) && std::isfinite(f2)))
            throw EvaluationError("integrand returned a non-finite value near x = " +
                                  std::to_string(centre - dx));
        fv[i] = f1;
        if (i != 7) fv[14 - i] = f2;
        const double fsum = (i == 7) ? f1 : f1 + f2;
        const double fabsum = (i == 7) ? std::fabs(f1) : std::fabs(f1) + std::fabs(f2);
        resk += gk15_weights[i] * fsum;
        resabs += gk15_weights[i] * fabsum;
        if (i % 2 == 1) resg += g7_weights[i / 2] * fsum; // odd indices carry the Gauss-7 rule
    }

    const double reskh = resk * 0.5;
    double resasc = gk15_weights[7] * std::fabs(fv[7] - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += gk15_weights[i] * (std::fabs(fv[i] - reskh) + std::fabs(fv[14 - i] - reskh));

    const double value = resk * half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round_floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    if (round_floor > std::numeric_limits<double>::min()) err = std::max(err, round_floor);
    return {lo, hi, value, err};
}

template <class F>
QuadratureResult adapt(F& f, std::vector<Segment> segments, const Tolerance& tol,
                       int max_segments) {
    long evals = static_cast<long>(segments.size()) * 15;
    double total_value = 0.0, total_error = 0.0;
    for (const Segment& s : segments) {
        total_value += s.value;
        total_error += s.error;
    }

    auto finish = [&](bool converged) {
        // Accumulate in interval order so the reported value does not depend
        // on the subdivision history layout.
        std::sort(segments.begin(), segments.end(),
                  [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
        double value = 0.0, error = 0.0;
        for (const Segment& s : segments) {
            value += s.value;
            error += s.error;
        }
        if (!converged)
            throw ConvergenceError("quadrature: subdivision budget exhausted", value, error);
        return QuadratureResult{value, error, evals};
    };

    while (true) {
        if (total_error <= std::max(tol.abs, tol.rel * std::fabs(total_value)))
            return finish(true);
        if (static_cast<int>(segments.size()) >= max_segments) return finish(false);

        // Deterministic selection: largest error, ties by leftmost endpoint.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segments.size(); ++i) {
            if (segments[i].error > segments[worst].error ||
                (segments[i].error == segments[worst].error &&
                 segments[i].lo < segments[worst].lo))
                worst = i;
        }
        const Segment parent = segments[worst];
        const double mid = 0.5 * (parent.lo + parent.hi);
        if (!(parent.lo < mid && mid < parent.hi)) {
            // Interval no longer splittable in double precision.
            return finish(total_error <=
                          std::max(tol.abs, tol.rel * std::fabs(total_value)) * 100.0);
        }
        const Segment left = gk15(f, parent.lo, mid);
        const Segment right = gk15(f, mid, parent.hi);
        evals += 30;
        total_value += left.value + right.value - parent.value;
        total_error += left.error + right.error - parent.error;
        segments[worst] = left;
        segments.push_back(right);
    }
}

} // namespace detail

/// Integrate f over [lo, hi]. Integrable endpoint singularities are allowed;
/// f is only evaluated at interior points.
template <class F>
QuadratureResult integrate_finite(F&& f, double lo, double hi, Tolerance tol = {},
                                  int max_segments = 2000) {
    validate(tol);
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw DomainError("integrate_finite: requires finite lo < hi");
    std::vector<detail::Segment> seed;
    seed.push_back(detail::gk15(f, lo, hi));
    return detail::adapt(f, std::move(seed), tol, max_segments);
}

/// Integrate f over [lo, inf) via the fixed smooth map y = lo + scale*t/(1-t).
/// `scale` should be of the order of the integrand's decay length; it only
/// conditions the map, the result does not depend on it once converged.
template <class F>
QuadratureResult integrate_semi_infinite(F&& f, double lo, Tolerance tol = {},
                                         double scale = 1.0, int max_segments = 2000) {
    validate(tol);
    if (!std::isfinite(lo)) throw DomainError("integrate_semi_infinite: lo must be finite");
    if (!(std::isfinite(scale) && scale > 0.0))
        throw DomainError("integrate_semi_infinite: scale must be positive");

    auto mapped = [&f, lo, scale](double t) {
        const double om = 1.0 - t;
        const double y = lo + scale * t / om;
        const double fy = f(y);
        if (fy == 0.0) return 0.0; // avoid 0 * huge-jacobian at the far tail
        return fy * scale / (om * om);
    };

    // Four seed panels so narrow features far from t=0 cannot hide between
    // the nodes of a single opening rule.
    std::vector<detail::Segment> seed;
    seed.reserve(4);
    for (int i = 0; i < 4; ++i)
        seed.push_back(detail::gk15(mapped, 0.25 * i, 0.25 * (i + 1)));
    return detail::adapt(mapped, std::move(seed), tol, max_segments);
}

} // namespace casimir

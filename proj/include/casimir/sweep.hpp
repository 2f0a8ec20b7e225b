#pragma once

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/species.hpp"
#include "casimir/units.hpp"

// Distance sweeps over a species ensemble and their CSV serialization.
// Points are evaluated in parallel (CASIMIR_THREADS, default: all cores)
// but every value depends only on its own grid point, so output bytes are
// independent of the thread count.

namespace casimir {

enum class Spacing { logarithmic, linear };

struct SweepSpec {
    double a_min_fm;
    double a_max_fm;
    int points = 100;
    Spacing spacing = Spacing::logarithmic;
    Ensemble ensemble;
    Tolerance tol{};
};

struct CurvePoint {
    double a_fm = 0.0;
    std::vector<double> force_mev4; // per-species magnitude, ensemble order
    double total_mev4 = 0.0;
    std::vector<double> ratio;      // per-species share of the total
};

inline void validate(const SweepSpec& spec) {
    if (!(std::isfinite(spec.a_min_fm) && std::isfinite(spec.a_max_fm) &&
          0.0 < spec.a_min_fm && spec.a_min_fm < spec.a_max_fm))
        throw DomainError("sweep: requires 0 < a_min < a_max");
    if (spec.points < 2) throw DomainError("sweep: needs at least 2 points");
    validate(spec.tol);
}

namespace detail {

inline double grid_point(const SweepSpec& spec, int i) {
    if (i == 0) return spec.a_min_fm;
    if (i == spec.points - 1) return spec.a_max_fm;
    const double f = static_cast<double>(i) / (spec.points - 1);
    if (spec.spacing == Spacing::linear)
        return spec.a_min_fm + (spec.a_max_fm - spec.a_min_fm) * f;
    return spec.a_min_fm * std::exp(std::log(spec.a_max_fm / spec.a_min_fm) * f);
}

inline int sweep_thread_count(int points) {
    int n = 0;
    if (const char* env = std::getenv("CASIMIR_THREADS")) {
        n = std::atoi(env);
        if (n <= 0) throw DomainError("CASIMIR_THREADS must be a positive integer");
    } else {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
    }
    return std::min(n, points);
}

inline CurvePoint evaluate_point(double a_fm, const Ensemble& ensemble, const Tolerance& tol) {
    CurvePoint p;
    p.a_fm = a_fm;
    const PlateSeparation a = separation_from_fm(a_fm);
    p.force_mev4.reserve(ensemble.size());
    for (const Species& s : ensemble.species())
        p.force_mev4.push_back(std::fabs(force(a, s.mass, tol).force.value));
    for (double v : p.force_mev4) p.total_mev4 += v;
    p.ratio.reserve(ensemble.size());
    for (double v : p.force_mev4)
        p.ratio.push_back(p.total_mev4 > 0.0 ? v / p.total_mev4 : 0.0);
    return p;
}

} // namespace detail

/// Evaluate one CurvePoint per grid distance, ascending in a.
inline std::vector<CurvePoint> run_sweep(const SweepSpec& spec) {
    validate(spec);
    std::vector<CurvePoint> rows(spec.points);
    const int threads = detail::sweep_thread_count(spec.points);

    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(spec.points);
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < spec.points; i = next.fetch_add(1)) {
            try {
                rows[i] = detail::evaluate_point(detail::grid_point(spec, i), spec.ensemble,
                                                 spec.tol);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

/// Fixed 17-significant-digit formatting; "." decimal separator, no locale.
inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Schema: a_fm, force_<name>_mev4 ..., force_total_mev4, ratio_<name> ...
/// Optional comment lines are emitted first, prefixed with "# ".
inline void write_sweep_csv(std::ostream& os, const Ensemble& ensemble,
                            const std::vector<CurvePoint>& rows,
                            const std::vector<std::string>& comments = {}) {
    for (const std::string& c : comments) os << "# " << c << "\n";
    os << "a_fm";
    for (const Species& s : ensemble.species()) os << ",force_" << s.name << "_mev4";
    os << ",force_total_mev4";
    for (const Species& s : ensemble.species()) os << ",ratio_" << s.name;
    os << "\n";
    for (const CurvePoint& p : rows) {
        os << format_value(p.a_fm);
        for (double v : p.force_mev4) os << ',' << format_value(v);
        os << ',' << format_value(p.total_mev4);
        for (double v : p.ratio) os << ',' << format_value(v);
        os << "\n";
    }
    if (!os) throw IoError("failed while writing sweep CSV");
}

} // namespace casimir

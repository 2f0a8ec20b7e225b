#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/force.hpp"
#include "casimir/units.hpp"

// Particle-species registry and multi-species superposition. Every species
// contributes as an ideal neutral scalar field of its mass; forces add
// linearly.

namespace casimir {

struct Species {
    std::string name;
    ParticleMass mass;
};

/// Ordered, non-empty set of uniquely named species.
class Ensemble {
public:
    explicit Ensemble(std::vector<Species> species) : species_(std::move(species)) {
        if (species_.empty()) throw DomainError("ensemble must contain at least one species");
        for (std::size_t i = 0; i < species_.size(); ++i)
            for (std::size_t j = i + 1; j < species_.size(); ++j)
                if (species_[i].name == species_[j].name)
                    throw DomainError("duplicate species name: " + species_[i].name);
    }

    const std::vector<Species>& species() const { return species_; }
    std::size_t size() const { return species_.size(); }

    const Species* find(std::string_view name) const {
        for (const Species& s : species_)
            if (s.name == name) return &s;
        return nullptr;
    }

private:
    std::vector<Species> species_;
};

/// Built-in registry: photon (0), positronium (1 MeV), pi0 (135 MeV).
/// With `precise`, positronium = 2 m_e = 1.022 MeV and pi0 = 134.9768 MeV.
inline Ensemble builtin_registry(bool precise = false) {
    std::vector<Species> s;
    s.push_back({"photon", ParticleMass(0.0)});
    s.push_back({"positronium", ParticleMass(precise ? 1.022 : 1.0)});
    s.push_back({"pi0", ParticleMass(precise ? 134.9768 : 135.0)});
    return Ensemble(std::move(s));
}

/// Sum of per-species forces (attractive, negative). Deterministic
/// summation in registry order.
inline ForcePerArea total_force(PlateSeparation a, const Ensemble& ensemble, Tolerance tol = {}) {
    double sum = 0.0;
    for (const Species& s : ensemble.species()) sum += force(a, s.mass, tol).force.value;
    return ForcePerArea(sum);
}

/// |F_s| / sum_i |F_i| for a species of the ensemble. Returns 0 when every
/// species has underflowed (no photon present, huge separation).
inline double contribution_ratio(PlateSeparation a, std::string_view species_name,
                                 const Ensemble& ensemble, Tolerance tol = {}) {
    if (!ensemble.find(species_name))
        throw DomainError("species not in ensemble: " + std::string(species_name));
    double total = 0.0;
    double own = 0.0;
    for (const Species& s : ensemble.species()) {
        const double mag = std::fabs(force(a, s.mass, tol).force.value);
        total += mag;
        if (s.name == species_name) own = mag;
    }
    return total > 0.0 ? own / total : 0.0;
}

namespace detail {

inline double ratio_by_series(double a, const Species& target, const Ensemble& ensemble) {
    double total = 0.0, own = 0.0;
    for (const Species& s : ensemble.species()) {
        const double mag =
            std::fabs(force_bessel_series(PlateSeparation(a), s.mass).force.value);
        total += mag;
        if (s.name == target.name) own = mag;
    }
    return total > 0.0 ? own / total : 0.0;
}

} // namespace detail

/// Distance a* (natural units) at which a massive species' contribution
/// ratio has dropped to half of its small-separation limit 1/N. The knee of
/// the ratio curve; reported alongside figure reproductions.
inline double crossover_half_distance(std::string_view species_name, const Ensemble& ensemble) {
    const Species* target = ensemble.find(species_name);
    if (!target) throw DomainError("species not in ensemble: " + std::string(species_name));
    if (target->mass.value <= 0.0)
        throw DomainError("crossover is defined for massive species only");

    const double limit = 1.0 / static_cast<double>(ensemble.size());
    const double goal = 0.5 * limit;
    const double m = target->mass.value;
    double lo = 5e-4 / m; // 2am = 1e-3: ratio ~ 1/N
    double hi = 30.0 / m; // 2am = 60: ratio ~ 0
    for (int i = 0; i < 200; ++i) {
        const double mid = std::sqrt(lo * hi);
        if (detail::ratio_by_series(mid, *target, ensemble) > goal)
            lo = mid;
        else
            hi = mid;
        if (hi / lo < 1.0 + 1e-12) break;
    }
    return std::sqrt(lo * hi);
}

} // namespace casimir

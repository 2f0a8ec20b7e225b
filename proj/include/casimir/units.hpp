#pragma once

#include <cmath>

#include "casimir/errors.hpp"

// Natural-unit (hbar = c = 1) value types and the few conversions the
// artifact needs. All core math works in MeV powers; fm and pascal appear
// only at the CLI boundary.

namespace casimir {

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// hbar*c in MeV*fm (CODATA). Converts femtometres to inverse MeV.
inline constexpr double hbar_c_mev_fm = 197.3269804;

/// 1 MeV/fm^3 expressed in pascal.
inline constexpr double mev_per_fm3_in_pascal = 1.6021766e32;

/// Plate distance a > 0 in natural length units (MeV^-1).
struct PlateSeparation {
    double value;

    explicit PlateSeparation(double v) : value(v) {
        if (!(std::isfinite(v) && v > 0.0))
            throw DomainError("plate separation must be positive and finite");
    }
};

/// Rest mass m >= 0 of the mediating species, in MeV.
struct ParticleMass {
    double value;

    explicit ParticleMass(double v) : value(v) {
        if (!(std::isfinite(v) && v >= 0.0))
            throw DomainError("particle mass must be non-negative and finite");
    }
};

/// Signed force per unit plate area in MeV^4. Negative = attractive.
struct ForcePerArea {
    double value;

    explicit ForcePerArea(double v) : value(v) {
        if (!std::isfinite(v))
            throw DomainError("force per area must be finite");
    }
};

/// Energy per unit plate area in MeV^3.
struct EnergyPerArea {
    double value;

    explicit EnergyPerArea(double v) : value(v) {
        if (!std::isfinite(v))
            throw DomainError("energy per area must be finite");
    }
};

/// Distance in fm -> natural length (MeV^-1).
inline double fm_to_natural(double d_fm) {
    if (!(std::isfinite(d_fm) && d_fm > 0.0))
        throw DomainError("distance in fm must be positive and finite");
    return d_fm / hbar_c_mev_fm;
}

/// Natural length (MeV^-1) -> fm.
inline double natural_to_fm(double d_nat) {
    if (!(std::isfinite(d_nat) && d_nat > 0.0))
        throw DomainError("natural length must be positive and finite");
    return d_nat * hbar_c_mev_fm;
}

inline PlateSeparation separation_from_fm(double d_fm) {
    return PlateSeparation(fm_to_natural(d_fm));
}

/// Force per area in MeV^4 -> pressure in Pa. Sign is preserved.
inline double natural_force_to_pascal(ForcePerArea f) {
    constexpr double mev4_to_mev_per_fm3 =
        1.0 / (hbar_c_mev_fm * hbar_c_mev_fm * hbar_c_mev_fm);
    return f.value * mev4_to_mev_per_fm3 * mev_per_fm3_in_pascal;
}

} // namespace casimir

#pragma once

// Umbrella header.

#include "casimir/abel_plana.hpp"
#include "casimir/bessel.hpp"
#include "casimir/errors.hpp"
#include "casimir/force.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/species.hpp"
#include "casimir/svg.hpp"
#include "casimir/sweep.hpp"
#include "casimir/units.hpp"

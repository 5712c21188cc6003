#pragma once

#include "qtb/constants.hpp"
#include "qtb/errors.hpp"
#include "qtb/geometry.hpp"
#include "qtb/potential.hpp"

namespace qtb {

// Everything about the device that is fixed during an optimization run.
struct DeviceModel {
    DeviceGeometry geometry;
    WindowParams window;
    PhysicalConstants constants;
};

// M energy points on [0, mu] for the transmission spectrum, M2 interpolation
// points on [mu - V0, mu] for the current integral.
struct SpectrumGrids {
    int energy_points = 100;
    int interp_points = 100;
};

inline void validate(const DeviceModel& m) {
    validate(m.geometry);
    validate(m.window, m.geometry);
    if (!(m.constants.hbar2_over_2m > 0.0))
        throw InvalidParameter("hbar^2/2m must be positive");
}

inline void validate(const SpectrumGrids& g) {
    if (g.energy_points < 2)
        throw InvalidParameter("need at least 2 energy points");
    if (g.interp_points < 2)
        throw InvalidParameter("need at least 2 interpolation points");
}

}  // namespace qtb

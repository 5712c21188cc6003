#pragma once

#include <cmath>

#include "qtb/constants.hpp"
#include "qtb/errors.hpp"

namespace qtb {

// k1 = sqrt(E / (hbar^2/2m)). The source band edge is the energy zero, so
// the source wavenumber depends on E alone; k1(0) = 0.
template <class S>
S wavenumber_source(S energy, const PhysicalConstants& pc) {
    using std::sqrt;
    if (value_of(energy) < 0.0) throw NegativeKineticEnergy(value_of(energy));
    return sqrt(energy / pc.hbar2_over_2m);
}

// k2 = sqrt((E + V0) / (hbar^2/2m)). Positive applied bias lowers the drain
// potential to -V0, so the drain kinetic energy is E + V0.
template <class S>
S wavenumber_drain(S energy, double bias, const PhysicalConstants& pc) {
    using std::sqrt;
    if (value_of(energy) + bias < 0.0)
        throw EvanescentDrain(value_of(energy), bias);
    return sqrt((energy + bias) / pc.hbar2_over_2m);
}

}  // namespace qtb

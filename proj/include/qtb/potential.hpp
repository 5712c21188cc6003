#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "qtb/constants.hpp"
#include "qtb/simd/tangent.hpp"
#include "qtb/errors.hpp"
#include "qtb/geometry.hpp"

namespace qtb {

// Smoothed box barrier. Height in eV; center and width are fractions of the
// device length; sharpness is the tanh edge slope in 1/nm (1/nm reproduces
// the plain tanh barrier, larger values approach a rectangular box).
template <class S>
struct BarrierParamsT {
    S height{};   // eV
    S center{};   // fraction of L in (0, 1)
    S width{};    // fraction of L, > 0
    double sharpness = 1.0;  // 1/nm
};

template <class S>
struct PotentialParamsT {
    BarrierParamsT<S> barrier1;
    BarrierParamsT<S> barrier2;
};

// The seven optimizable parameters: (H1, C1, W1, H2, C2, W2, mu).
template <class S>
struct DesignVectorT {
    PotentialParamsT<S> potential;
    S fermi{};  // eV
};

using BarrierParams = BarrierParamsT<double>;
using PotentialParams = PotentialParamsT<double>;
using DesignVector = DesignVectorT<double>;

// Flat view of the optimizable parameters in slot order
// (H1, C1, W1, H2, C2, W2, mu). Barrier sharpness is a fixed shape knob,
// not an optimization variable.
inline std::array<double, kDesignDim> design_components(
    const DesignVector& d) {
    return {d.potential.barrier1.height, d.potential.barrier1.center,
            d.potential.barrier1.width,  d.potential.barrier2.height,
            d.potential.barrier2.center, d.potential.barrier2.width,
            d.fermi};
}

inline DesignVector with_components(
    const DesignVector& base, const std::array<double, kDesignDim>& c) {
    DesignVector d = base;
    d.potential.barrier1.height = c[0];
    d.potential.barrier1.center = c[1];
    d.potential.barrier1.width = c[2];
    d.potential.barrier2.height = c[3];
    d.potential.barrier2.center = c[4];
    d.potential.barrier2.width = c[5];
    d.fermi = c[6];
    return d;
}

inline DesignVector design_from_components(
    const std::array<double, kDesignDim>& c, double sharpness = 1.0) {
    DesignVector base;
    base.potential.barrier1.sharpness = sharpness;
    base.potential.barrier2.sharpness = sharpness;
    return with_components(base, c);
}

// Multiplicative window that flattens the barriers at both terminals so the
// contact potentials stay at 0 and -V0 regardless of the barrier placement.
struct WindowParams {
    double margin_frac = 0.1;  // terminal margin as a fraction of L
    double sharpness = 2.0;    // 1/nm
};

inline void validate(const BarrierParams& b) {
    if (!(b.width > 0.0)) throw InvalidParameter("barrier width must be > 0");
    if (!(b.center > 0.0 && b.center < 1.0))
        throw InvalidParameter("barrier center must lie in (0, 1)");
    if (!(b.sharpness > 0.0))
        throw InvalidParameter("barrier sharpness must be > 0");
}

inline void validate(const DesignVector& d) {
    validate(d.potential.barrier1);
    validate(d.potential.barrier2);
    if (!(d.fermi > 0.0)) throw InvalidParameter("Fermi level must be > 0");
}

inline void validate(const WindowParams& w, const DeviceGeometry& g) {
    const double margin = w.margin_frac * g.length;
    if (!(margin > 0.0 && margin < 0.5 * g.length))
        throw InvalidParameter("window margin must lie in (0, L/2)");
    if (!(w.sharpness > 0.0))
        throw InvalidParameter("window sharpness must be > 0");
}

// B(x) = H [tanh(sigma (x - x_left)) - tanh(sigma (x - x_right))] / 2
// with x_left/right = L (2C -/+ W) / 2.
template <class S>
S barrier_profile(double x, const BarrierParamsT<S>& b, double length) {
    using std::tanh;
    const double half_length = 0.5 * length;
    S edge_left = half_length * (2.0 * b.center - b.width);
    S edge_right = half_length * (2.0 * b.center + b.width);
    S lhs = tanh(b.sharpness * (x - edge_left));
    S rhs = tanh(b.sharpness * (x - edge_right));
    return b.height * (lhs - rhs) * 0.5;
}

inline double bias_profile(double x, double bias, double length) {
    return bias * (x / length);
}

// w(x) = [tanh(s (x - margin)) - tanh(s (x - (L - margin)))] / 2;
// ~1 mid-device, ~0 at the terminals. Independent of the design vector,
// so it is always a plain double.
inline double window_profile(double x, double length, double margin,
                             double sharpness) {
    return 0.5 * (std::tanh(sharpness * (x - margin)) -
                  std::tanh(sharpness * (x - (length - margin))));
}

inline double window_profile(double x, const DeviceGeometry& g,
                             const WindowParams& w) {
    return window_profile(x, g.length, w.margin_frac * g.length, w.sharpness);
}

// Windowed double-barrier term w(x) (B1(x) + B2(x)); the piece of the total
// potential that depends on the design parameters.
template <class S>
S windowed_barriers(double x, const PotentialParamsT<S>& p,
                    const DeviceGeometry& g, const WindowParams& w) {
    return window_profile(x, g, w) *
           (barrier_profile(x, p.barrier1, g.length) +
            barrier_profile(x, p.barrier2, g.length));
}

// U(x) = w(x) (B1 + B2) - V_bias(x) - E. Folding -E into U makes the
// assembled linear system homogeneous in E.
template <class S>
S total_potential(double x, const PotentialParamsT<S>& p, S energy,
                  double bias, const DeviceGeometry& g, const WindowParams& w) {
    return windowed_barriers(x, p, g, w) - bias_profile(x, bias, g.length) -
           energy;
}

template <class S>
std::vector<S> sample_potential(const PotentialParamsT<S>& p, S energy,
                                double bias, const DeviceGeometry& g,
                                const WindowParams& w) {
    std::vector<S> u(g.points);
    for (int i = 0; i < g.points; ++i)
        u[i] = total_potential(g.node(i), p, energy, bias, g, w);
    return u;
}

// Same windowed-barrier values as sample_potential but without the bias and
// energy terms; computed once per design vector and shared across a whole
// (E, V0) sweep.
template <class S>
std::vector<S> windowed_barrier_table(const PotentialParamsT<S>& p,
                                      const DeviceGeometry& g,
                                      const WindowParams& w) {
    std::vector<S> table(g.points);
    for (int i = 0; i < g.points; ++i)
        table[i] = windowed_barriers(g.node(i), p, g, w);
    return table;
}

}  // namespace qtb

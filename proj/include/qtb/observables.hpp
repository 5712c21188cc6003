#pragma once

#include <utility>
#include <vector>

#include "qtb/model.hpp"
#include "qtb/solver.hpp"

namespace qtb {

// Guard in the transmission denominator; keeps T(E=0) = 0 well defined.
// Affects the value lane only (it is an additive constant).
inline constexpr double kTransmissionEpsilon = 1e-10;  // 1/nm

template <class S>
struct SpectrumPoint {
    S energy{};
    S transmission{};
};

struct IVCurve {
    std::vector<double> biases;    // eV
    std::vector<double> currents;  // transmission-integral units (eV)
};

// T = k2 |psi_{n-1}|^2 / (k1 + eps) for an already-solved state.
template <class S>
S transmission_of(const ScatteringWorkspace<S>& ws) {
    return ws.k2 * abs2(ws.psi.back()) / (ws.k1 + kTransmissionEpsilon);
}

template <class S>
S transmission(S energy, double bias, const PotentialParamsT<S>& p,
               const DeviceModel& m) {
    validate(m);
    ScatteringWorkspace<S> ws;
    solve_scattering(ws, energy, bias,
                     windowed_barrier_table(p, m.geometry, m.window),
                     m.geometry, m.constants);
    return transmission_of(ws);
}

// T on the energy grid E_j = mu j/(M-1), j = 0..M-1. `barrier_table` comes
// from windowed_barrier_table so a whole sweep shares one barrier
// evaluation.
template <class S>
std::vector<SpectrumPoint<S>> transmission_spectrum(
    ScatteringWorkspace<S>& ws, const std::vector<S>& barrier_table,
    double bias, S fermi, const DeviceModel& m, int energy_points) {
    std::vector<SpectrumPoint<S>> out(energy_points);
    for (int j = 0; j < energy_points; ++j) {
        S energy = fermi * (static_cast<double>(j) / (energy_points - 1));
        solve_scattering(ws, energy, bias, barrier_table, m.geometry,
                         m.constants);
        out[j] = {energy, transmission_of(ws)};
    }
    return out;
}

template <class S>
std::vector<SpectrumPoint<S>> transmission_spectrum(double bias,
                                                    const PotentialParamsT<S>& p,
                                                    S fermi,
                                                    const DeviceModel& m,
                                                    int energy_points) {
    validate(m);
    if (!(value_of(fermi) > 0.0))
        throw InvalidParameter("Fermi level must be > 0");
    if (energy_points < 2)
        throw InvalidParameter("need at least 2 energy points");
    ScatteringWorkspace<S> ws;
    auto table = windowed_barrier_table(p, m.geometry, m.window);
    return transmission_spectrum(ws, table, bias, fermi, m, energy_points);
}

namespace detail {

// np.interp semantics: linear inside, clamped to the end values outside.
// Interval selection uses the value lane; the interpolation arithmetic stays
// in S so derivatives flow through both the ordinates and the grid.
template <class S>
S interp_clamped(const std::vector<S>& xs, const std::vector<S>& ys,
                 const S& q) {
    const int n = static_cast<int>(xs.size());
    const double qv = value_of(q);
    if (qv <= value_of(xs.front())) return ys.front();
    if (qv >= value_of(xs.back())) return ys.back();
    int lo = 0, hi = n - 1;
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        if (value_of(xs[mid]) <= qv)
            lo = mid;
        else
            hi = mid;
    }
    S t = (q - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

template <class S>
S trapezoid(const std::vector<S>& x, const std::vector<S>& y) {
    S acc(0.0);
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        acc += (x[i + 1] - x[i]) * (y[i] + y[i + 1]) * 0.5;
    return acc;
}

}  // namespace detail

// I(V0) = integral of T over [mu - V0, mu]: spectrum on [0, mu] with M
// points, interpolated onto M2 points of the bias window (clamped below
// E = 0), then trapezoid rule. Reported in transmission-integral units; the
// 2e/h conductance prefactor is deliberately not applied.
template <class S>
S current(ScatteringWorkspace<S>& ws, const std::vector<S>& barrier_table,
          double bias, S fermi, const DeviceModel& m,
          const SpectrumGrids& grids) {
    if (bias < 0.0) throw InvalidParameter("bias must be >= 0");
    if (bias == 0.0) return S(0.0);  // empty integration window

    auto spectrum = transmission_spectrum(ws, barrier_table, bias, fermi, m,
                                          grids.energy_points);
    std::vector<S> xs(spectrum.size()), ys(spectrum.size());
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        xs[j] = spectrum[j].energy;
        ys[j] = spectrum[j].transmission;
    }

    const int m2 = grids.interp_points;
    std::vector<S> qs(m2), ts(m2);
    S start = fermi - bias;
    for (int i = 0; i < m2; ++i) {
        qs[i] = i == m2 - 1
                    ? fermi
                    : start + bias * (static_cast<double>(i) / (m2 - 1));
        ts[i] = detail::interp_clamped(xs, ys, qs[i]);
    }
    return detail::trapezoid(qs, ts);
}

template <class S>
S current(double bias, const PotentialParamsT<S>& p, S fermi,
          const DeviceModel& m, const SpectrumGrids& grids) {
    validate(m);
    validate(grids);
    if (!(value_of(fermi) > 0.0))
        throw InvalidParameter("Fermi level must be > 0");
    ScatteringWorkspace<S> ws;
    auto table = windowed_barrier_table(p, m.geometry, m.window);
    return current(ws, table, bias, fermi, m, grids);
}

// Independent solves per bias; the barrier table is shared.
inline IVCurve iv_curve(const std::vector<double>& biases,
                        const PotentialParams& p, double fermi,
                        const DeviceModel& m, const SpectrumGrids& grids) {
    validate(m);
    validate(grids);
    if (!(fermi > 0.0)) throw InvalidParameter("Fermi level must be > 0");
    for (std::size_t i = 0; i < biases.size(); ++i) {
        if (biases[i] < 0.0) throw InvalidParameter("biases must be >= 0");
        if (i > 0 && biases[i] < biases[i - 1])
            throw InvalidParameter("biases must be sorted ascending");
    }
    IVCurve out;
    out.biases = biases;
    out.currents.resize(biases.size());
    ScatteringWorkspace<double> ws;
    auto table = windowed_barrier_table(p, m.geometry, m.window);
    for (std::size_t i = 0; i < biases.size(); ++i)
        out.currents[i] = current(ws, table, biases[i], fermi, m, grids);
    return out;
}

}  // namespace qtb

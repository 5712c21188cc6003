#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qtb/dual.hpp"
#include "qtb/geometry.hpp"
#include "qtb/potential.hpp"
#include "qtb/wavenumber.hpp"

namespace qtb {

// Discrete open-boundary system (H + U + B) psi = S for one (E, V0, phi).
// lower/diag/upper have lengths n-1, n, n-1; away from the two boundary
// corners the off-diagonals are all exactly -alpha.
template <class S>
struct TridiagonalSystem {
    std::vector<Complex<S>> lower;
    std::vector<Complex<S>> diag;
    std::vector<Complex<S>> upper;
    std::vector<Complex<S>> source;

    int size() const { return static_cast<int>(diag.size()); }
};

template <class S>
struct ScatteringState {
    std::vector<Complex<S>> psi;
    S energy{};
    double bias = 0.0;
    S k1{};
    S k2{};
    double residual_norm = 0.0;
};

// Relative residual bound a solved state must meet to be accepted.
inline constexpr double kResidualBound = 1e-10;
// Pivot magnitudes below this fraction of the largest row are treated as
// elimination breakdown.
inline constexpr double kPivotFloor = 1e-14;

inline double hopping_energy(const DeviceGeometry& g,
                             const PhysicalConstants& pc) {
    const double a = g.spacing();
    return pc.hbar2_over_2m / (a * a);  // alpha, eV
}

// BND_j = i k_j alpha a_n; purely imaginary for propagating states.
template <class S>
Complex<S> boundary_term(int terminal, S energy, double bias,
                         const DeviceGeometry& g, const PhysicalConstants& pc) {
    const double alpha_a = hopping_energy(g, pc) * g.spacing();
    S k = terminal == 1 ? wavenumber_source(energy, pc)
                        : wavenumber_drain(energy, bias, pc);
    return {S(0.0), k * alpha_a};
}

namespace detail {

inline double mag1(const std::complex<double>& z) {
    return std::abs(z.real()) + std::abs(z.imag());
}

template <class S>
double mag1(const Complex<S>& z) {
    return std::abs(value_of(z.re)) + std::abs(value_of(z.im));
}

}  // namespace detail

// Fills sys for the given energy/bias; `barrier_table` holds the windowed
// barrier values at the nodes (windowed_barrier_table), so the barriers are
// evaluated once per design vector rather than once per (E, V0).
template <class S>
void assemble_system(TridiagonalSystem<S>& sys, S energy, double bias,
                     S k_source, S k_drain, const std::vector<S>& barrier_table,
                     const DeviceGeometry& g, const PhysicalConstants& pc) {
    const int n = g.points;
    const double alpha = hopping_energy(g, pc);
    const double alpha_a = alpha * g.spacing();

    sys.lower.assign(n - 1, Complex<S>{S(-alpha), S(0.0)});
    sys.upper.assign(n - 1, Complex<S>{S(-alpha), S(0.0)});
    sys.diag.resize(n);
    sys.source.assign(n, Complex<S>{});

    auto potential_at = [&](int i) {
        return barrier_table[i] - bias_profile(g.node(i), bias, g.length) -
               energy;
    };

    sys.diag[0] = Complex<S>{alpha + potential_at(0), -(k_source * alpha_a)};
    for (int i = 1; i < n - 1; ++i)
        sys.diag[i] = Complex<S>{2.0 * alpha + potential_at(i), S(0.0)};
    sys.diag[n - 1] =
        Complex<S>{alpha + potential_at(n - 1), -(k_drain * alpha_a)};

    // charge injected at x = 0: first source entry is 2 BND_1
    sys.source[0] = Complex<S>{S(0.0), 2.0 * (k_source * alpha_a)};
}

template <class S>
TridiagonalSystem<S> assemble_system(S energy, double bias,
                                     const PotentialParamsT<S>& p,
                                     const DeviceGeometry& g,
                                     const WindowParams& w,
                                     const PhysicalConstants& pc) {
    validate(g);
    TridiagonalSystem<S> sys;
    S k1 = wavenumber_source(energy, pc);
    S k2 = wavenumber_drain(energy, bias, pc);
    assemble_system(sys, energy, bias, k1, k2, windowed_barrier_table(p, g, w),
                    g, pc);
    return sys;
}

// Thomas elimination + back substitution, destroying diag/source. The pivot
// guard converts elimination breakdown into an explicit error instead of
// silent garbage; `row_scale` is the largest |row|_1 of the original matrix.
template <class S>
void eliminate_in_place(TridiagonalSystem<S>& sys,
                        std::vector<Complex<S>>& psi, double row_scale) {
    const int n = sys.size();
    psi.resize(n);
    const double floor = kPivotFloor * row_scale;

    if (detail::mag1(sys.diag[0]) < floor) throw SingularPivot(0);
    for (int i = 1; i < n; ++i) {
        Complex<S> w = sys.lower[i - 1] / sys.diag[i - 1];
        sys.diag[i] = sys.diag[i] - w * sys.upper[i - 1];
        sys.source[i] = sys.source[i] - w * sys.source[i - 1];
        if (detail::mag1(sys.diag[i]) < floor)
            throw SingularPivot(static_cast<std::size_t>(i));
    }
    psi[n - 1] = sys.source[n - 1] / sys.diag[n - 1];
    for (int i = n - 2; i >= 0; --i)
        psi[i] = (sys.source[i] - sys.upper[i] * psi[i + 1]) / sys.diag[i];
}

template <class S>
double max_row_mag1(const TridiagonalSystem<S>& sys) {
    const int n = sys.size();
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = detail::mag1(sys.diag[i]);
        if (i > 0) row += detail::mag1(sys.lower[i - 1]);
        if (i + 1 < n) row += detail::mag1(sys.upper[i]);
        m = row > m ? row : m;
    }
    return m;
}

// ||A psi - S||_2 and ||S||_2 over the value lane.
template <class S>
std::pair<double, double> residual_norms(const TridiagonalSystem<S>& sys,
                                         const std::vector<Complex<S>>& psi) {
    const int n = sys.size();
    double rr = 0.0, ss = 0.0;
    for (int i = 0; i < n; ++i) {
        std::complex<double> acc = value_of(sys.diag[i]) * value_of(psi[i]);
        if (i > 0) acc += value_of(sys.lower[i - 1]) * value_of(psi[i - 1]);
        if (i + 1 < n) acc += value_of(sys.upper[i]) * value_of(psi[i + 1]);
        const std::complex<double> s = value_of(sys.source[i]);
        acc -= s;
        rr += std::norm(acc);
        ss += std::norm(s);
    }
    return {std::sqrt(rr), std::sqrt(ss)};
}

// Solves a copy of sys and verifies the residual against the original.
template <class S>
std::vector<Complex<S>> solve_tridiagonal(const TridiagonalSystem<S>& sys) {
    TridiagonalSystem<S> scratch = sys;
    std::vector<Complex<S>> psi;
    eliminate_in_place(scratch, psi, max_row_mag1(sys));
    const auto [res, src] = residual_norms(sys, psi);
    if (res > kResidualBound * src) throw ResidualTooLarge(res, src);
    return psi;
}

// Reusable buffers for energy/bias sweeps: one assembly + solve per call
// with no per-call allocation after the first.
template <class S>
struct ScatteringWorkspace {
    TridiagonalSystem<S> sys;
    TridiagonalSystem<S> saved;
    std::vector<Complex<S>> psi;

    S k1{};
    S k2{};
    double residual = 0.0;
};

template <class S>
void solve_scattering(ScatteringWorkspace<S>& ws, S energy, double bias,
                      const std::vector<S>& barrier_table,
                      const DeviceGeometry& g, const PhysicalConstants& pc) {
    ws.k1 = wavenumber_source(energy, pc);
    ws.k2 = wavenumber_drain(energy, bias, pc);
    assemble_system(ws.sys, energy, bias, ws.k1, ws.k2, barrier_table, g, pc);
    ws.saved = ws.sys;
    eliminate_in_place(ws.sys, ws.psi, max_row_mag1(ws.saved));
    const auto [res, src] = residual_norms(ws.saved, ws.psi);
    if (res > kResidualBound * src) throw ResidualTooLarge(res, src);
    ws.residual = res;
}

// Assembles, solves and verifies one scattering state. E = 0 injects no
// charge and yields the zero wavefunction.
template <class S>
ScatteringState<S> scattering_state(S energy, double bias,
                                    const PotentialParamsT<S>& p,
                                    const DeviceGeometry& g,
                                    const WindowParams& w,
                                    const PhysicalConstants& pc) {
    validate(g);
    ScatteringWorkspace<S> ws;
    solve_scattering(ws, energy, bias, windowed_barrier_table(p, g, w), g, pc);
    return {std::move(ws.psi), energy, bias, ws.k1, ws.k2, ws.residual};
}

// Discrete probability current on links: J_i = Im(conj(psi_i) psi_{i+1}) / a.
template <class S>
std::vector<S> probability_current(const std::vector<Complex<S>>& psi,
                                   double spacing) {
    const int n = static_cast<int>(psi.size());
    std::vector<S> j(n > 0 ? n - 1 : 0);
    for (int i = 0; i + 1 < n; ++i)
        j[i] = (psi[i].re * psi[i + 1].im - psi[i].im * psi[i + 1].re) /
               spacing;
    return j;
}

template <class S>
std::vector<S> probability_current(const ScatteringState<S>& state,
                                   const DeviceGeometry& g) {
    return probability_current(state.psi, g.spacing());
}

}  // namespace qtb

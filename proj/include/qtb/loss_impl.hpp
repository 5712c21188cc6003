#pragma once

// Scalar-generic loss pipeline shared by the plain evaluation and the
// per-backend gradient translation units.

#include "qtb/dual.hpp"
#include "qtb/gradient.hpp"
#include "qtb/observables.hpp"

namespace qtb {

// L_j = I(V_j; Phi) - I_target_j;  loss = (L . L) / m
template <class S>
S loss_value_generic(const DesignVectorT<S>& d, const Observations& obs,
                     const DeviceModel& m, const SpectrumGrids& grids) {
    auto table = windowed_barrier_table(d.potential, m.geometry, m.window);
    ScatteringWorkspace<S> ws;
    S acc(0.0);
    for (int j = 0; j < obs.count(); ++j) {
        S err = current(ws, table, obs.v_targets[j], d.fermi, m, grids) -
                obs.i_targets[j];
        acc += err * err;
    }
    return acc / static_cast<double>(obs.count());
}

template <class K>
LossEval loss_with_gradient_impl(const DesignVector& d, const Observations& obs,
                                 const DeviceModel& m,
                                 const SpectrumGrids& grids) {
    auto seeded = seed_design<K>(d);
    BasicDual<K> l = loss_value_generic(seeded, obs, m, grids);
    return {extract_value(l), extract_gradient(l)};
}

}  // namespace qtb

#pragma once

#include <array>
#include <vector>

#include "qtb/model.hpp"
#include "qtb/potential.hpp"
#include "qtb/simd/backend.hpp"

namespace qtb {

// m target (V, I) pairs driving the inverse problem.
struct Observations {
    std::vector<double> v_targets;  // eV, nonnegative
    std::vector<double> i_targets;  // transmission-integral units

    int count() const { return static_cast<int>(v_targets.size()); }
};

inline void validate(const Observations& o) {
    if (o.v_targets.size() != o.i_targets.size())
        throw InvalidParameter("observation vectors must have equal length");
    if (o.v_targets.empty())
        throw InvalidParameter("need at least one observation");
    for (double v : o.v_targets)
        if (v < 0.0) throw InvalidParameter("target biases must be >= 0");
}

struct LossEval {
    double value = 0.0;
    std::array<double, kDesignDim> gradient{};
};

// Mean squared current mismatch over the observations (plain evaluation).
double loss_value(const DesignVector& d, const Observations& obs,
                  const DeviceModel& m, const SpectrumGrids& grids);

// Loss and its full 7-component gradient in one forward pass over seeded
// duals. The two-argument form uses the active tangent backend; the explicit
// form throws BackendUnavailable if the requested backend cannot run here.
LossEval loss_with_gradient(const DesignVector& d, const Observations& obs,
                            const DeviceModel& m, const SpectrumGrids& grids);
LossEval loss_with_gradient(const DesignVector& d, const Observations& obs,
                            const DeviceModel& m, const SpectrumGrids& grids,
                            TangentBackend backend);

// Central differences of loss_value per component, step
// h = h_scale * max(1, |Phi_i|). Validation oracle for the dual pipeline.
std::array<double, kDesignDim> finite_difference_gradient(
    const DesignVector& d, const Observations& obs, const DeviceModel& m,
    const SpectrumGrids& grids, double h_scale = 1e-5);

}  // namespace qtb

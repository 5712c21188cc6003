#include "qtb/loss_impl.hpp"
#include "qtb/simd/kernels_scalar.hpp"

namespace qtb::detail {

LossEval loss_with_gradient_scalar(const DesignVector& d,
                                   const Observations& obs,
                                   const DeviceModel& m,
                                   const SpectrumGrids& grids) {
    return loss_with_gradient_impl<ScalarKernels>(d, obs, m, grids);
}

}  // namespace qtb::detail

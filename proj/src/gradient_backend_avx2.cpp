// Compiled with -mavx2; reached only through the runtime backend check.

#include "qtb/loss_impl.hpp"
#include "qtb/simd/backend.hpp"
#include "qtb/simd/kernels_avx2.hpp"

namespace qtb::detail {

LossEval loss_with_gradient_avx2(const DesignVector& d, const Observations& obs,
                                 const DeviceModel& m,
                                 const SpectrumGrids& grids) {
    return loss_with_gradient_impl<Avx2Kernels>(d, obs, m, grids);
}

const KernelTable kAvx2KernelTable = {
    &Avx2Kernels::zero, &Avx2Kernels::copy,  &Avx2Kernels::add,
    &Avx2Kernels::sub,  &Avx2Kernels::scale, &Avx2Kernels::axpby,
};

}  // namespace qtb::detail

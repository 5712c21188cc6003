#include "qtb/gradient.hpp"

#include <cmath>

#include "qtb/loss_impl.hpp"

namespace qtb {

namespace detail {
LossEval loss_with_gradient_scalar(const DesignVector&, const Observations&,
                                   const DeviceModel&, const SpectrumGrids&);
#ifdef QTB_HAVE_AVX2_BACKEND
LossEval loss_with_gradient_avx2(const DesignVector&, const Observations&,
                                 const DeviceModel&, const SpectrumGrids&);
#endif
}  // namespace detail

double loss_value(const DesignVector& d, const Observations& obs,
                  const DeviceModel& m, const SpectrumGrids& grids) {
    validate(obs);
    DesignVectorT<double> plain = d;
    return loss_value_generic(plain, obs, m, grids);
}

LossEval loss_with_gradient(const DesignVector& d, const Observations& obs,
                            const DeviceModel& m, const SpectrumGrids& grids,
                            TangentBackend backend) {
    validate(obs);
    switch (backend) {
        case TangentBackend::scalar:
            return detail::loss_with_gradient_scalar(d, obs, m, grids);
        case TangentBackend::avx2:
#ifdef QTB_HAVE_AVX2_BACKEND
            if (tangent_backend_available(TangentBackend::avx2))
                return detail::loss_with_gradient_avx2(d, obs, m, grids);
#endif
            break;
    }
    throw BackendUnavailable(to_string(backend));
}

LossEval loss_with_gradient(const DesignVector& d, const Observations& obs,
                            const DeviceModel& m, const SpectrumGrids& grids) {
    return loss_with_gradient(d, obs, m, grids, active_tangent_backend());
}

std::array<double, kDesignDim> finite_difference_gradient(
    const DesignVector& d, const Observations& obs, const DeviceModel& m,
    const SpectrumGrids& grids, double h_scale) {
    const auto base = design_components(d);
    std::array<double, kDesignDim> g{};
    for (int i = 0; i < kDesignDim; ++i) {
        const double h = h_scale * std::max(1.0, std::abs(base[i]));
        auto hi = base, lo = base;
        hi[i] += h;
        lo[i] -= h;
        const double up = loss_value(with_components(d, hi), obs, m, grids);
        const double dn = loss_value(with_components(d, lo), obs, m, grids);
        g[i] = (up - dn) / (2.0 * h);
    }
    return g;
}

}  // namespace qtb

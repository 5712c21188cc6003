#include "qtb/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qtb/rng.hpp"

namespace qtb {

StartResult optimize(const DesignVector& start, const Observations& obs,
                     const DeviceModel& model, const SpectrumGrids& grids,
                     const OptimizeSettings& settings,
                     const ParamBounds& bounds) {
    validate(obs);
    validate(bounds);
    validate(start);
    if (settings.iterations < 0)
        throw InvalidParameter("iteration count must be >= 0");

    StartResult out;
    out.params = start;
    out.history.reserve(settings.iterations + 1);

    AdaBeliefState state;
    state.hyper = settings.hyper;

    bool stopped_early = false;
    for (int it = 0; it < settings.iterations; ++it) {
        const LossEval eval = loss_with_gradient(out.params, obs, model, grids);
        if (!std::isfinite(eval.value)) throw NonFiniteLoss(it);
        out.history.push_back(eval.value);
        if (settings.early_stop_loss > 0.0 &&
            eval.value <= settings.early_stop_loss) {
            stopped_early = true;
            break;
        }
        auto next =
            adabelief_step(state, eval.gradient, design_components(out.params));
        for (int i = 0; i < kDesignDim; ++i)
            next[i] = std::clamp(next[i], bounds.lo[i], bounds.hi[i]);
        out.params = with_components(out.params, next);
    }
    if (!stopped_early)
        out.history.push_back(loss_value(out.params, obs, model, grids));
    out.final_loss = out.history.back();
    return out;
}

RunResult multi_start(const Observations& obs, int k_starts,
                      const ParamBounds& bounds, std::uint64_t seed,
                      const DeviceModel& model, const SpectrumGrids& grids,
                      const OptimizeSettings& settings) {
    validate(obs);
    validate(bounds);
    if (k_starts < 1) throw InvalidParameter("need at least one start");

    // Draw every start up front so the stream consumption is independent of
    // how individual starts behave.
    std::vector<DesignVector> starts;
    starts.reserve(k_starts);
    SplitMix64 rng(seed);
    for (int s = 0; s < k_starts; ++s) {
        std::array<double, kDesignDim> c{};
        for (int i = 0; i < kDesignDim; ++i)
            c[i] = rng.uniform(bounds.lo[i], bounds.hi[i]);
        starts.push_back(design_from_components(c, settings.barrier_sharpness));
    }

    RunResult out;
    out.seed = seed;
    out.starts.reserve(k_starts);
    for (int s = 0; s < k_starts; ++s) {
        StartResult r;
        try {
            r = optimize(starts[s], obs, model, grids, settings, bounds);
        } catch (const NonFiniteLoss& e) {
            r.params = starts[s];
            r.failed = true;
            r.failed_iteration = e.iteration;
            r.final_loss = std::numeric_limits<double>::quiet_NaN();
        }
        out.loss_history.push_back(r.history);
        if (!r.failed &&
            (out.start_index < 0 || r.final_loss < out.best_loss)) {
            out.best_loss = r.final_loss;
            out.best_params = r.params;
            out.start_index = s;
        }
        out.starts.push_back(std::move(r));
    }
    if (out.start_index < 0) throw AllStartsFailed();
    return out;
}

}  // namespace qtb

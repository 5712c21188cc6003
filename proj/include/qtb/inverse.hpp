#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qtb/gradient.hpp"
#include "qtb/optimizer.hpp"

namespace qtb {

// Box constraints per design slot; iterates are clamped back into the box
// after every optimizer step.
struct ParamBounds {
    std::array<double, kDesignDim> lo{};
    std::array<double, kDesignDim> hi{};

    static ParamBounds defaults() {
        ParamBounds b;
        b.lo = {0.05, 0.2, 0.02, 0.05, 0.2, 0.02, 0.05};
        b.hi = {0.5, 0.8, 0.2, 0.5, 0.8, 0.2, 0.3};
        return b;
    }
};

inline void validate(const ParamBounds& b) {
    for (int i = 0; i < kDesignDim; ++i)
        if (!(b.lo[i] < b.hi[i]))
            throw InvalidParameter("bounds must satisfy lo < hi per component");
}

struct OptimizeSettings {
    int iterations = 1000;
    AdaBeliefHyper hyper;
    double barrier_sharpness = 1.0;  // fixed shape knob for drawn starts
    // Stop a start once its loss falls to this level (<= 0 disables). Only
    // shortens runs that already met the target; the iteration cap and all
    // recorded losses are unchanged otherwise.
    double early_stop_loss = 0.0;
};

struct StartResult {
    DesignVector params;
    double final_loss = 0.0;
    std::vector<double> history;  // loss at the iterate before each step,
                                  // plus the final loss
    bool failed = false;
    int failed_iteration = -1;
};

struct RunResult {
    DesignVector best_params;
    double best_loss = 0.0;
    std::vector<std::vector<double>> loss_history;  // one vector per start
    int start_index = -1;
    std::uint64_t seed = 0;
    std::vector<StartResult> starts;
};

// AdaBelief descent from one start. Throws NonFiniteLoss if the loss stops
// being finite; multi_start records such starts as failed.
StartResult optimize(const DesignVector& start, const Observations& obs,
                     const DeviceModel& model, const SpectrumGrids& grids,
                     const OptimizeSettings& settings,
                     const ParamBounds& bounds);

// k_starts initial vectors drawn uniformly inside `bounds` from a seeded
// SplitMix64 stream (7 draws per start, slot order), optimized
// independently; best final loss wins, ties broken by lowest start index.
RunResult multi_start(const Observations& obs, int k_starts,
                      const ParamBounds& bounds, std::uint64_t seed,
                      const DeviceModel& model, const SpectrumGrids& grids,
                      const OptimizeSettings& settings);

}  // namespace qtb

#pragma once

#include <array>
#include <cmath>

#include "qtb/simd/tangent.hpp"

namespace qtb {

struct AdaBeliefHyper {
    double learning_rate = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-16;
};

struct AdaBeliefState {
    std::array<double, kDesignDim> first_moment{};
    std::array<double, kDesignDim> second_moment{};
    long step_count = 0;
    AdaBeliefHyper hyper;
};

// One AdaBelief update:
//   m_t = b1 m + (1-b1) g
//   s_t = b2 s + (1-b2)(g - m_t)^2 + eps
//   x  -= lr * mhat / (sqrt(shat) + eps)   (bias-corrected mhat, shat)
inline std::array<double, kDesignDim> adabelief_step(
    AdaBeliefState& state, const std::array<double, kDesignDim>& gradient,
    const std::array<double, kDesignDim>& params) {
    const auto& h = state.hyper;
    state.step_count += 1;
    const double bc1 = 1.0 - std::pow(h.beta1, state.step_count);
    const double bc2 = 1.0 - std::pow(h.beta2, state.step_count);

    std::array<double, kDesignDim> out = params;
    for (int i = 0; i < kDesignDim; ++i) {
        double& m = state.first_moment[i];
        double& s = state.second_moment[i];
        const double g = gradient[i];
        m = h.beta1 * m + (1.0 - h.beta1) * g;
        const double centered = g - m;
        s = h.beta2 * s + (1.0 - h.beta2) * centered * centered + h.epsilon;
        const double mhat = m / bc1;
        const double shat = s / bc2;
        out[i] = params[i] - h.learning_rate * mhat / (std::sqrt(shat) + h.epsilon);
    }
    return out;
}

}  // namespace qtb

#pragma once

#include <array>
#include <cstddef>

namespace qtb {

// One tangent slot per optimizable design parameter:
// (H1, C1, W1, H2, C2, W2, mu).
inline constexpr int kDesignDim = 7;

// Tangent blocks are padded to 8 lanes so a block is exactly two 256-bit
// vectors. Lane 7 is always zero.
inline constexpr int kTangentLanes = 8;

struct alignas(32) Tangent {
    double lane[kTangentLanes];
};

inline Tangent zero_tangent() {
    Tangent t;
    for (int i = 0; i < kTangentLanes; ++i) t.lane[i] = 0.0;
    return t;
}

inline Tangent unit_tangent(int slot) {
    Tangent t = zero_tangent();
    t.lane[slot] = 1.0;
    return t;
}

inline std::array<double, kDesignDim> to_array(const Tangent& t) {
    std::array<double, kDesignDim> out;
    for (int i = 0; i < kDesignDim; ++i) out[i] = t.lane[i];
    return out;
}

}  // namespace qtb

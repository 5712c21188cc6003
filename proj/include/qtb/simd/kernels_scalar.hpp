#pragma once

// Reference tangent-block kernels: plain lane loops, one IEEE double op per
// lane with no reassociation. These define the semantics every other
// backend must reproduce bitwise.

#include "qtb/simd/tangent.hpp"

namespace qtb {

struct ScalarKernels {
    static void zero(Tangent& out) {
        for (int i = 0; i < kTangentLanes; ++i) out.lane[i] = 0.0;
    }

    static void copy(Tangent& out, const Tangent& x) {
        for (int i = 0; i < kTangentLanes; ++i) out.lane[i] = x.lane[i];
    }

    static void add(Tangent& out, const Tangent& x, const Tangent& y) {
        for (int i = 0; i < kTangentLanes; ++i)
            out.lane[i] = x.lane[i] + y.lane[i];
    }

    static void sub(Tangent& out, const Tangent& x, const Tangent& y) {
        for (int i = 0; i < kTangentLanes; ++i)
            out.lane[i] = x.lane[i] - y.lane[i];
    }

    // out = a * x
    static void scale(Tangent& out, double a, const Tangent& x) {
        for (int i = 0; i < kTangentLanes; ++i) out.lane[i] = a * x.lane[i];
    }

    // out = a * x + b * y   (product rule, quotient rule)
    static void axpby(Tangent& out, double a, const Tangent& x, double b,
                      const Tangent& y) {
        for (int i = 0; i < kTangentLanes; ++i)
            out.lane[i] = a * x.lane[i] + b * y.lane[i];
    }
};

}  // namespace qtb

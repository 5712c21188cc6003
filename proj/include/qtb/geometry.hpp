#pragma once

#include "qtb/errors.hpp"

namespace qtb {

// 1D device: n uniformly spaced nodes on [0, L], node 0 at the source
// terminal and node n-1 at the drain terminal.
struct DeviceGeometry {
    double length = 40.0;  // nm
    int points = 100;

    double spacing() const { return length / (points - 1); }
    double node(int i) const {
        return length * (static_cast<double>(i) / (points - 1));
    }
};

inline void validate(const DeviceGeometry& g) {
    if (!(g.length > 0.0))
        throw InvalidParameter("device length must be positive");
    if (g.points < 3)
        throw InvalidParameter("grid needs at least 3 nodes");
}

}  // namespace qtb

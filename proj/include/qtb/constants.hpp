#pragma once

namespace qtb {

// hbar^2 / (2 m_e) in eV nm^2, from CODATA hbar = 1.054571817e-34 J s,
// m_e = 9.1093837015e-31 kg, e = 1.602176634e-19 C.
inline constexpr double kHbar2Over2MeEvNm2 = 0.0380998;

struct PhysicalConstants {
    double hbar2_over_2m = kHbar2Over2MeEvNm2;  // eV nm^2
};

// Generic value projection; the dual-number overload lives in dual.hpp.
constexpr double value_of(double x) noexcept { return x; }

}  // namespace qtb

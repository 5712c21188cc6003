#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "qtb/constants.hpp"
#include "qtb/errors.hpp"
#include "qtb/potential.hpp"
#include "qtb/simd/kernels_scalar.hpp"
#include "qtb/simd/tangent.hpp"

namespace qtb {

// Forward-mode scalar: a value plus a 7-wide tangent block, one slot per
// design parameter. K supplies the tangent-block kernels so the same
// arithmetic can run on the scalar reference kernels or a SIMD variant.
//
// All value-lane arithmetic is written with the exact same expressions as
// plain double arithmetic; running a computation on zero-tangent duals
// reproduces the double run bitwise.
template <class K>
struct BasicDual {
    double v;
    Tangent t;

    BasicDual() : v(0.0) { K::zero(t); }
    BasicDual(double value) : v(value) { K::zero(t); }  // constant (NOLINT)
    BasicDual(double value, const Tangent& tangent) : v(value), t(tangent) {}

    BasicDual& operator+=(const BasicDual& o) { return *this = *this + o; }
    BasicDual& operator-=(const BasicDual& o) { return *this = *this - o; }
    BasicDual& operator*=(const BasicDual& o) { return *this = *this * o; }
    BasicDual& operator/=(const BasicDual& o) { return *this = *this / o; }

    friend BasicDual operator+(const BasicDual& a, const BasicDual& b) {
        BasicDual r;
        r.v = a.v + b.v;
        K::add(r.t, a.t, b.t);
        return r;
    }
    friend BasicDual operator-(const BasicDual& a, const BasicDual& b) {
        BasicDual r;
        r.v = a.v - b.v;
        K::sub(r.t, a.t, b.t);
        return r;
    }
    friend BasicDual operator-(const BasicDual& a) {
        BasicDual r;
        r.v = -a.v;
        K::scale(r.t, -1.0, a.t);
        return r;
    }
    friend BasicDual operator*(const BasicDual& a, const BasicDual& b) {
        BasicDual r;
        r.v = a.v * b.v;
        K::axpby(r.t, b.v, a.t, a.v, b.t);
        return r;
    }
    friend BasicDual operator/(const BasicDual& a, const BasicDual& b) {
        if (b.v == 0.0) throw DivisionByZero();
        BasicDual r;
        r.v = a.v / b.v;
        const double inv = 1.0 / b.v;
        K::axpby(r.t, inv, a.t, -r.v * inv, b.t);
        return r;
    }

    // Mixed ops with plain constants avoid touching the constant's (zero)
    // tangent block.
    friend BasicDual operator+(const BasicDual& a, double c) {
        BasicDual r;
        r.v = a.v + c;
        K::copy(r.t, a.t);
        return r;
    }
    friend BasicDual operator+(double c, const BasicDual& a) { return a + c; }
    friend BasicDual operator-(const BasicDual& a, double c) {
        BasicDual r;
        r.v = a.v - c;
        K::copy(r.t, a.t);
        return r;
    }
    friend BasicDual operator-(double c, const BasicDual& a) {
        BasicDual r;
        r.v = c - a.v;
        K::scale(r.t, -1.0, a.t);
        return r;
    }
    friend BasicDual operator*(const BasicDual& a, double c) {
        BasicDual r;
        r.v = a.v * c;
        K::scale(r.t, c, a.t);
        return r;
    }
    friend BasicDual operator*(double c, const BasicDual& a) { return a * c; }
    friend BasicDual operator/(const BasicDual& a, double c) {
        if (c == 0.0) throw DivisionByZero();
        BasicDual r;
        r.v = a.v / c;
        K::scale(r.t, 1.0 / c, a.t);
        return r;
    }
    friend BasicDual operator/(double c, const BasicDual& a) {
        if (a.v == 0.0) throw DivisionByZero();
        BasicDual r;
        r.v = c / a.v;
        K::scale(r.t, -r.v / a.v, a.t);
        return r;
    }
};

template <class K>
double value_of(const BasicDual<K>& d) noexcept {
    return d.v;
}

// sqrt at exactly zero returns tangent zero: the derivative is unbounded
// there and downstream formulas guard the singular point themselves.
template <class K>
BasicDual<K> sqrt(const BasicDual<K>& a) {
    if (a.v < 0.0) throw SqrtDomain(a.v);
    BasicDual<K> r;
    if (a.v == 0.0) return r;
    r.v = std::sqrt(a.v);
    K::scale(r.t, 0.5 / r.v, a.t);
    return r;
}

template <class K>
BasicDual<K> tanh(const BasicDual<K>& a) {
    BasicDual<K> r;
    r.v = std::tanh(a.v);
    K::scale(r.t, 1.0 - r.v * r.v, a.t);
    return r;
}

template <class K>
BasicDual<K> exp(const BasicDual<K>& a) {
    BasicDual<K> r;
    r.v = std::exp(a.v);
    K::scale(r.t, r.v, a.t);
    return r;
}

// ---------------------------------------------------------------------
// Complex scalars generic over the real type. Division is written as
// z conj(w) / |w|^2 for every scalar type, so plain and dual runs follow
// the same value-lane arithmetic.
// ---------------------------------------------------------------------

template <class S>
struct Complex {
    S re{};
    S im{};

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const S& s) {
        return {a.re * s, a.im * s};
    }
    friend Complex operator*(const S& s, const Complex& a) { return a * s; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        S denom = abs2(b);
        if (value_of(denom) == 0.0) throw DivisionByZero();
        Complex num = a * conj(b);
        return {num.re / denom, num.im / denom};
    }
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

template <class S>
Complex<S> conj(const Complex<S>& z) {
    return {z.re, -z.im};
}

template <class S>
S abs2(const Complex<S>& z) {
    return z.re * z.re + z.im * z.im;
}

template <class S>
std::complex<double> value_of(const Complex<S>& z) {
    return {value_of(z.re), value_of(z.im)};
}

// ---------------------------------------------------------------------
// Seeding and projections
// ---------------------------------------------------------------------

// Component i carries value Phi_i and tangent e_i.
template <class K = ScalarKernels>
std::array<BasicDual<K>, kDesignDim> seed(const DesignVector& d) {
    const auto c = design_components(d);
    std::array<BasicDual<K>, kDesignDim> out;
    for (int i = 0; i < kDesignDim; ++i)
        out[i] = BasicDual<K>(c[i], unit_tangent(i));
    return out;
}

template <class K = ScalarKernels>
DesignVectorT<BasicDual<K>> seed_design(const DesignVector& d) {
    const auto s = seed<K>(d);
    DesignVectorT<BasicDual<K>> out;
    out.potential.barrier1 = {s[0], s[1], s[2], d.potential.barrier1.sharpness};
    out.potential.barrier2 = {s[3], s[4], s[5], d.potential.barrier2.sharpness};
    out.fermi = s[6];
    return out;
}

template <class K>
double extract_value(const BasicDual<K>& d) {
    return d.v;
}

template <class K>
std::array<double, kDesignDim> extract_gradient(const BasicDual<K>& d) {
    return to_array(d.t);
}

// Default dual scalar used outside the dispatched hot paths.
using Dual = BasicDual<ScalarKernels>;
using ComplexDual = Complex<Dual>;

}  // namespace qtb

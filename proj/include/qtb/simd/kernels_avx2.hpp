#pragma once

// AVX2 tangent-block kernels: one 8-lane block is two 256-bit vectors.
// Multiplies and adds are kept separate (no FMA) so each lane computes the
// same IEEE sequence as ScalarKernels and results match bitwise.
//
// Only compiled into translation units built with -mavx2; callers must go
// through the runtime backend check before executing these.

#if defined(__AVX2__)

#include <immintrin.h>

#include "qtb/simd/tangent.hpp"

namespace qtb {

struct Avx2Kernels {
    static void zero(Tangent& out) {
        const __m256d z = _mm256_setzero_pd();
        _mm256_store_pd(out.lane, z);
        _mm256_store_pd(out.lane + 4, z);
    }

    static void copy(Tangent& out, const Tangent& x) {
        _mm256_store_pd(out.lane, _mm256_load_pd(x.lane));
        _mm256_store_pd(out.lane + 4, _mm256_load_pd(x.lane + 4));
    }

    static void add(Tangent& out, const Tangent& x, const Tangent& y) {
        _mm256_store_pd(out.lane, _mm256_add_pd(_mm256_load_pd(x.lane),
                                                _mm256_load_pd(y.lane)));
        _mm256_store_pd(out.lane + 4, _mm256_add_pd(_mm256_load_pd(x.lane + 4),
                                                    _mm256_load_pd(y.lane + 4)));
    }

    static void sub(Tangent& out, const Tangent& x, const Tangent& y) {
        _mm256_store_pd(out.lane, _mm256_sub_pd(_mm256_load_pd(x.lane),
                                                _mm256_load_pd(y.lane)));
        _mm256_store_pd(out.lane + 4, _mm256_sub_pd(_mm256_load_pd(x.lane + 4),
                                                    _mm256_load_pd(y.lane + 4)));
    }

    static void scale(Tangent& out, double a, const Tangent& x) {
        const __m256d av = _mm256_set1_pd(a);
        _mm256_store_pd(out.lane, _mm256_mul_pd(av, _mm256_load_pd(x.lane)));
        _mm256_store_pd(out.lane + 4,
                        _mm256_mul_pd(av, _mm256_load_pd(x.lane + 4)));
    }

    static void axpby(Tangent& out, double a, const Tangent& x, double b,
                      const Tangent& y) {
        const __m256d av = _mm256_set1_pd(a);
        const __m256d bv = _mm256_set1_pd(b);
        _mm256_store_pd(
            out.lane,
            _mm256_add_pd(_mm256_mul_pd(av, _mm256_load_pd(x.lane)),
                          _mm256_mul_pd(bv, _mm256_load_pd(y.lane))));
        _mm256_store_pd(
            out.lane + 4,
            _mm256_add_pd(_mm256_mul_pd(av, _mm256_load_pd(x.lane + 4)),
                          _mm256_mul_pd(bv, _mm256_load_pd(y.lane + 4))));
    }
};

}  // namespace qtb

#endif  // __AVX2__

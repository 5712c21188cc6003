#include "qtb/simd/backend.hpp"

#include <atomic>

#include "qtb/errors.hpp"
#include "qtb/simd/kernels_scalar.hpp"

namespace qtb {

namespace detail {

const KernelTable kScalarKernelTable = {
    &ScalarKernels::zero, &ScalarKernels::copy,  &ScalarKernels::add,
    &ScalarKernels::sub,  &ScalarKernels::scale, &ScalarKernels::axpby,
};

#ifdef QTB_HAVE_AVX2_BACKEND
// Defined in gradient_backend_avx2.cpp (compiled with -mavx2).
extern const KernelTable kAvx2KernelTable;
#endif

const KernelTable& kernel_table(TangentBackend b) {
    if (!tangent_backend_available(b)) throw BackendUnavailable(to_string(b));
    switch (b) {
        case TangentBackend::scalar:
            return kScalarKernelTable;
        case TangentBackend::avx2:
#ifdef QTB_HAVE_AVX2_BACKEND
            return kAvx2KernelTable;
#else
            break;
#endif
    }
    throw BackendUnavailable(to_string(b));
}

}  // namespace detail

const char* to_string(TangentBackend b) {
    switch (b) {
        case TangentBackend::scalar: return "scalar";
        case TangentBackend::avx2: return "avx2";
    }
    return "unknown";
}

static bool cpu_has_avx2() {
#if defined(QTB_HAVE_AVX2_BACKEND) && defined(__GNUC__) && \
    (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool tangent_backend_available(TangentBackend b) {
    switch (b) {
        case TangentBackend::scalar: return true;
        case TangentBackend::avx2: return cpu_has_avx2();
    }
    return false;
}

TangentBackend detect_tangent_backend() {
    return cpu_has_avx2() ? TangentBackend::avx2 : TangentBackend::scalar;
}

namespace {
std::atomic<TangentBackend>& active_slot() {
    static std::atomic<TangentBackend> slot{detect_tangent_backend()};
    return slot;
}
}  // namespace

TangentBackend active_tangent_backend() { return active_slot().load(); }

void set_tangent_backend(TangentBackend b) {
    if (!tangent_backend_available(b)) throw BackendUnavailable(to_string(b));
    active_slot().store(b);
}

}  // namespace qtb

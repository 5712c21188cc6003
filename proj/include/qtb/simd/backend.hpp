#pragma once

#include <string>

#include "qtb/simd/tangent.hpp"

namespace qtb {

enum class TangentBackend { scalar, avx2 };

const char* to_string(TangentBackend b);

// True when the backend is both compiled in and supported by this CPU.
bool tangent_backend_available(TangentBackend b);

// Best available backend, chosen once at first use.
TangentBackend detect_tangent_backend();

// Process-wide selection used by the dispatched entry points. Defaults to
// detect_tangent_backend(); set_tangent_backend throws BackendUnavailable
// for a backend that cannot run here.
TangentBackend active_tangent_backend();
void set_tangent_backend(TangentBackend b);

namespace detail {

// Raw kernel entry points per backend, exposed for equivalence tests.
struct KernelTable {
    void (*zero)(Tangent&);
    void (*copy)(Tangent&, const Tangent&);
    void (*add)(Tangent&, const Tangent&, const Tangent&);
    void (*sub)(Tangent&, const Tangent&, const Tangent&);
    void (*scale)(Tangent&, double, const Tangent&);
    void (*axpby)(Tangent&, double, const Tangent&, double, const Tangent&);
};

// Throws BackendUnavailable if b cannot run on this machine/build.
const KernelTable& kernel_table(TangentBackend b);

}  // namespace detail
}  // namespace qtb

#include "fmd/runtime.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fmd {

namespace {

int detect_max_threads() {
#ifdef _OPENMP
    int hw = omp_get_max_threads();
    if (const char* env = std::getenv("FMD_THREADS")) {
        try {
            int requested = std::stoi(env);
            if (requested < 1) requested = 1;
            if (requested < hw) return requested;
        } catch (...) {
            // Unparseable value: fall through to the hardware default.
        }
    }
    return hw;
#else
    return 1;
#endif
}

} // namespace

int max_threads() {
    static const int cached = detect_max_threads();
    return cached;
}

} // namespace fmd

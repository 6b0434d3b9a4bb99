#pragma once

namespace fmd {

// Worker-pool cap for the OpenMP kernels.  Reads FMD_THREADS once; values
// outside [1, hardware] are clamped.  Returns 1 when built without OpenMP.
int max_threads();

} // namespace fmd

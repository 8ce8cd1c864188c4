#pragma once

namespace aperylab {

// Runtime switch between the OpenMP kernels and their serial reference
// implementations. Defaults to parallel when compiled with OpenMP.
void set_parallel(bool on);
bool parallel_enabled();

} // namespace aperylab

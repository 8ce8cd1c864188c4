#include "aperylab/parallel.hpp"

#include <atomic>

namespace aperylab {

namespace {
#ifdef _OPENMP
std::atomic<bool> g_parallel{true};
#else
std::atomic<bool> g_parallel{false};
#endif
} // namespace

void set_parallel(bool on) {
#ifdef _OPENMP
    g_parallel.store(on);
#else
    (void)on;
#endif
}

bool parallel_enabled() { return g_parallel.load(); }

} // namespace aperylab

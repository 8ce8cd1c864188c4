#include "aperylab/constants.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace aperylab {

namespace {
std::shared_mutex g_bernoulli_mutex;
std::vector<Rat> g_bernoulli;  // grows monotonically; index k holds B_k
} // namespace

Rat bernoulli(unsigned long k) {
    {
        std::shared_lock lock(g_bernoulli_mutex);
        if (k < g_bernoulli.size()) return g_bernoulli[k];
    }
    std::unique_lock lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) g_bernoulli.push_back(Rat(1));
    // sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1, i.e.
    // B_k = -1/(k+1) * sum_{j<k} C(k+1, j) B_j.  Gives B_1 = -1/2.
    for (unsigned long m = g_bernoulli.size(); m <= k; ++m) {
        if (m >= 3 && m % 2 == 1) {
            g_bernoulli.push_back(Rat(0));
            continue;
        }
        Rat s(0);
        for (unsigned long j = 0; j < m; ++j) {
            if (g_bernoulli[j].is_zero()) continue;
            s += Rat(binomial(static_cast<long>(m) + 1, static_cast<long>(j))) * g_bernoulli[j];
        }
        g_bernoulli.push_back(-s / Rat(static_cast<long>(m) + 1));
    }
    return g_bernoulli[k];
}

Real pi_real(long P) {
    return certified(P, 0, [](long W) {
        Real r(0L, W);
        mpfr_const_pi(r.raw(), MPFR_RNDN);
        return r;
    });
}

Real euler_gamma(long P) {
    return certified(P, 0, [](long W) {
        Real r(0L, W);
        mpfr_const_euler(r.raw(), MPFR_RNDN);
        return r;
    });
}

Real log2_real(long P) {
    return certified(P, 0, [](long W) {
        Real r(0L, W);
        mpfr_const_log2(r.raw(), MPFR_RNDN);
        return r;
    });
}

} // namespace aperylab

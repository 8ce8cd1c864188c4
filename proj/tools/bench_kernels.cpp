// Timing comparison of the OpenMP kernels against their serial references:
// the binomial-sum oracle, the Wronskian convolution, the divisor-sum tables
// and the direct character summation. Results must match exactly; the serial
// implementations are the ground truth the tests compare against.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aperylab/deresonate.hpp"
#include "aperylab/modular.hpp"
#include "aperylab/parallel.hpp"
#include "aperylab/sequences.hpp"
#include "aperylab/special.hpp"

using namespace aperylab;

namespace {

double seconds(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s serial %8.3f s   omp %8.3f s   speedup %5.2fx   %s\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0, equal ? "match" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif

    {
        SeqPair s, p;
        double ts = seconds([&] { s = detail::binomial_oracle_serial(220, InnerExponent::cubic); });
        double tp = seconds([&] { p = detail::binomial_oracle_omp(220, InnerExponent::cubic); });
        report("binomial oracle n=220", ts, tp, s.a == p.a && s.b == p.b);
    }

    {
        const long n_max = 320, W = 900;
        ExponentSet exps = make_exponents(5, Real(Rat(1, 8), W), Real(Rat(1, 12), W));
        Real half(Rat(1, 2), W);
        PerturbedSeries plus = perturbed_series(exps, half + exps.e.to_digits(W), n_max, W);
        PerturbedSeries minus = perturbed_series(exps, half - exps.e.to_digits(W), n_max, W);
        WronskianSeries ws, wp;
        double ts = seconds([&] { ws = detail::wronskian_serial(plus, minus, n_max, "R_e"); });
        double tp = seconds([&] { wp = detail::wronskian_omp(plus, minus, n_max, "R_e"); });
        bool equal = true;
        for (long n = 0; n <= n_max; ++n)
            equal = equal && ws.coeffs[static_cast<size_t>(n)] == wp.coeffs[static_cast<size_t>(n)];
        report("wronskian n=320 @900d", ts, tp, equal);
    }

    {
        std::vector<Int> s, p;
        double ts = seconds([&] { s = detail::sigma_table_serial(2000000, 3); });
        double tp = seconds([&] { p = detail::sigma_table_omp(2000000, 3); });
        report("sigma_3 table to 2e6", ts, tp, s == p);
    }

    {
        Real s, p;
        bool saved = parallel_enabled();
        set_parallel(false);
        double ts = seconds([&] { s = detail::chi3_direct(2, 13); });
        set_parallel(true);
        double tp = seconds([&] { p = detail::chi3_direct(2, 13); });
        set_parallel(saved);
        report("chi3 direct sum P=13", ts, tp, s == p);
    }

    return 0;
}

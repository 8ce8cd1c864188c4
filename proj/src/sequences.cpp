#include "aperylab/sequences.hpp"

#include "aperylab/parallel.hpp"

namespace aperylab {

SeqPair apery_pair(const std::string& variety, long n_max) {
    Recurrence rec = op_to_recurrence(mukai_operator(variety));
    SeqPair pair;
    pair.variety = variety;
    pair.a = solve(rec, {Rat(1)}, n_max);
    for (long n = 0; n <= n_max; ++n) {
        if (!pair.a[static_cast<size_t>(n)].is_integer())
            throw precision_error("apery_pair: a_" + std::to_string(n) + " of " + variety +
                                  " is not integral (operator transcription bug)");
    }
    if (n_max >= 1) {
        Recurrence brec = rec.with_valid_from(2);
        pair.b = solve(brec, {Rat(0), Rat(1)}, n_max);
    } else {
        pair.b = {Rat(0)};
    }
    pair.normalization = {Rat(1), 1, Rat(1)};
    return pair;
}

namespace detail {

namespace {

// One row of the oracle: exact a_n and b_n from the binomial double sums.
void oracle_row(long n, InnerExponent inner, Rat& a_out, Rat& b_out) {
    Rat a(0), b(0);
    // prefix harmonic sum sum_{m=1}^{n} 1/m^p with p = 3 or 2
    Rat harm(0);
    long p = inner == InnerExponent::cubic ? 3 : 2;
    for (long m = 1; m <= n; ++m) harm += Rat(1) / Rat(m).pow(p);
    Rat inner_sum(0);  // sum_{m<=k} (-1)^{m-1} / (2 m^3 C(n,m) C(n+m,m)), built incrementally
    for (long k = 0; k <= n; ++k) {
        if (k >= 1) {
            Rat den = Rat(2) * Rat(k).pow(3) * Rat(binomial(n, k)) * Rat(binomial(n + k, k));
            Rat term = Rat(1) / den;
            if (k % 2 == 0) term = -term;
            inner_sum += term;
        }
        Rat w = Rat(binomial(n, k) * binomial(n + k, k)).pow(2);
        a += w;
        b += w * (harm + inner_sum);
    }
    a_out = a;
    b_out = b / Rat(6);
}

SeqPair assemble(long n_max, InnerExponent inner, bool parallel) {
    SeqPair pair;
    pair.variety = "apery-zeta3-oracle";
    pair.a.assign(static_cast<size_t>(n_max) + 1, Rat(0));
    pair.b.assign(static_cast<size_t>(n_max) + 1, Rat(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long n = 0; n <= n_max; ++n)
        oracle_row(n, inner, pair.a[static_cast<size_t>(n)], pair.b[static_cast<size_t>(n)]);
#else
    (void)parallel;
    for (long n = 0; n <= n_max; ++n)
        oracle_row(n, inner, pair.a[static_cast<size_t>(n)], pair.b[static_cast<size_t>(n)]);
#endif
    pair.normalization = {Rat(1), 1, pair.b.size() > 1 ? pair.b[1] : Rat(0)};
    return pair;
}

} // namespace

SeqPair binomial_oracle_serial(long n_max, InnerExponent inner) { return assemble(n_max, inner, false); }
SeqPair binomial_oracle_omp(long n_max, InnerExponent inner) { return assemble(n_max, inner, true); }

} // namespace detail

SeqPair apery_binomial_oracle(long n_max, InnerExponent inner) {
    return parallel_enabled() ? detail::binomial_oracle_omp(n_max, inner)
                              : detail::binomial_oracle_serial(n_max, inner);
}

bool denominator_bound_check(const SeqPair& pair, long n) {
    if (n < 0 || n >= static_cast<long>(pair.b.size()))
        throw input_error("denominator_bound_check: n out of range");
    Int bound = Int(12) * pow_int(lcm_range(std::max(n, 1L)), 3);
    return bound.divisible_by(pair.b[static_cast<size_t>(n)].den());
}

} // namespace aperylab

#pragma once

// Independent oracles used only by tests. They deliberately avoid the
// library code paths (and mpfr's own constants) they are checking.

#include "aperylab/constants.hpp"
#include "aperylab/real.hpp"

namespace aperylab::test_oracles {

// arctan(1/x) by its Taylor series, exact rational terms rounded once.
inline Real atan_inv(long x, long digits) {
    Real sum(0L, digits);
    Rat x2(x * x);
    Rat pw(1, x);
    for (long k = 0;; ++k) {
        Rat term = pw / Rat(2 * k + 1);
        Real t(term, digits);
        if (k % 2 == 0) sum += t;
        else sum -= t;
        if (t.abs().exponent10() < -(digits + 5)) break;
        pw = pw / x2;
    }
    return sum;
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
inline Real machin_pi(long P) {
    long W = P + 15;
    return (atan_inv(5, W) * 16 - atan_inv(239, W) * 4).to_digits(P);
}

// Harmonic-minus-log with the Euler-Maclaurin correction:
// gamma = H_K - log K - 1/(2K) + sum_j B_{2j} / (2j K^{2j}).
inline Real harmonic_gamma(long P) {
    long W = P + 15;
    long K = 2 * W;  // error floor ~ (2j)!/(2 pi K)^{2j} at the best j
    Rat H(0);
    for (long k = 1; k <= K; ++k) H += Rat(1, k);
    Real g = Real(H, W) - Real(Rat(K), W).log() - Real(Rat(1, 2 * K), W);
    Rat Kpow(K * K);
    for (unsigned long j = 1;; ++j) {
        Rat term = bernoulli(2 * j) / (Rat(2 * static_cast<long>(j)) * Kpow);
        Real t(term, W);
        g += t;
        if (t.abs().exponent10() < -(W + 5)) break;
        if (j > 200) break;
        Kpow *= Rat(K * K);
    }
    return g.to_digits(P);
}

} // namespace aperylab::test_oracles

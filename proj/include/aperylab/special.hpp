#pragma once

#include "aperylab/constants.hpp"
#include "aperylab/real.hpp"

namespace aperylab {

struct LValueRequest {
    enum class Kind { zeta, hurwitz, chi3 };
    Kind kind = Kind::zeta;
    long s = 2;
    Rat a = Rat(1);   // hurwitz only, 0 < a <= 1
    long prec = 50;
};

// Riemann zeta at integer s (s >= 2 convergent, s = 0 continued value -1/2).
// Computed by Euler-Maclaurin and cross-checked against the alternating-series
// route; the two must agree to P digits.
Real zeta_int(long s, long P);

// Hurwitz zeta(s, a) for integer s (s >= 2 or s = 0) and rational 0 < a <= 1,
// by Euler-Maclaurin with a Bernoulli tail.
Real hurwitz_zeta(long s, const Rat& a, long P);

// L(chi_3, s) for the quadratic character mod 3:
//   L(chi_3, s) = 3^{-s} (zeta(s, 1/3) - zeta(s, 2/3)),  L(chi_3, 0) = 1/3.
Real chi3_L(long s, long P);

// log Gamma(1 - t) = gamma*t + sum_{i>=2} zeta(i)/i * t^i for |t| < 1/2.
Real log_gamma_one_minus(const Real& t, long P);

// Gamma(x) for real x > 0: argument shift to the Stirling regime, then the
// Stirling series with a Bernoulli tail. Integer and half-integer x are exact.
Real gamma_real(const Real& x, long P);

Real l_value(const LValueRequest& req);

// Gamma(x + d) * Gamma(x - d) using the reflection shortcut when x is 1/2 or 1:
//   Gamma(1/2+d) Gamma(1/2-d) = pi / cos(pi d)
//   Gamma(1+d)   Gamma(1-d)   = pi d / sin(pi d)
Real gamma_pm_product(const Real& x, const Real& d, long P);

namespace detail {

// Uncertified single-pass routines at a fixed working precision; exposed for
// the dual-method tests.
Real zeta_em(long s, long work_digits);
Real hurwitz_em(long s, const Rat& a, long work_digits);
Real zeta_alternating(long s, long work_digits);   // Borwein's eta acceleration
Real chi3_direct(long s, long digits);             // grouped character sum with tail bound
Real zeta_cached(long s, long work_digits);

} // namespace detail

} // namespace aperylab

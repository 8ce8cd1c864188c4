#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "aperylab/limits.hpp"
#include "aperylab/real.hpp"
#include "aperylab/sequences.hpp"

namespace aperylab {

// Exponents of the deresonated hypergeometric operator
//   L_dr = (D-1/2-u)(D-1/2+u)(D-1/2-e)(D-1/2+e)(D-1/2)^{N-4} + t.
struct ExponentSet {
    long N = 5;
    Real e, u;

    // {1/2+e, 1/2-e, 1/2+u, 1/2-u, 1/2 x (N-4)} at the precision of e.
    std::vector<Real> exponents() const;
};

// Validates N >= 5, e,u nonzero, e != +-u, |e|,|u| < 1/4.
ExponentSet make_exponents(long N, const Real& e, const Real& u);

// Solution coefficient stream g with
//   g(0) = 1 / prod_j Gamma(alpha - alpha_j + 1),
//   g(n) = -g(n-1) / prod_j (alpha - alpha_j + n),
// so that S_alpha = sum g(n) t^{alpha+n} solves L_dr S = 0.
struct PerturbedSeries {
    Real alpha;
    std::vector<Real> coeffs;
    long prec = 0;
};

PerturbedSeries perturbed_series(const ExponentSet& exps, const Real& alpha, long n_max, long P);

// Wronskian R = S_+ S_-' - S_+' S_-  for an exponent pair with
// alpha_+ + alpha_- = 1:  r^(n) = sum_{k+m=n} (m - k + delta) g_+(k) g_-(m),
// delta = alpha_- - alpha_+.  term_scale_e10 records the largest term
// magnitude entering each convolution (cancellation diagnostics).
struct WronskianSeries {
    std::vector<Real> coeffs;
    std::string label;
    std::vector<long> term_scale_e10;

    // Decimal digits lost to cancellation at index n.
    long cancellation_digits(long n) const;
};

WronskianSeries wronskian(const PerturbedSeries& plus, const PerturbedSeries& minus, long n_max,
                          const std::string& label = "R");

struct SineReport {
    long N = 0;
    Real e, u;
    ApproxLimit limit;
    Real target;
    bool ok = false;
    long n_cap = 0;
    long work_digits = 0;

    nlohmann::json to_json() const;
};

// Extrapolates lim r_e^(n)/r_u^(n) and compares with sin(2 pi e)/sin(2 pi u).
SineReport sine_ratio_check(const ExponentSet& exps, long n_max, long P);

// The closed expression in r_e^(0,1), r_u^(0,1) and the sine ratio:
//   (1/N) (sin(2 pi u)/sin(2 pi e) r_e^{(0)2} - r_u^(0) r_e^(0))
//         / (r_u^(1) r_e^(0) - r_e^(1) r_u^(0)).
Real perturbed_apery_constant(const ExponentSet& exps, long P);

// Resonance limit of the perturbed constant along e = 10^-k, u = 2*10^-k,
// escalating k and precision until two successive values agree to P digits.
ApproxLimit pac_limit(long N, long P);

// Integer a_{Nn} and rational b-coefficients recovered from the Wronskian
// streams at a tiny perturbation (numerical l'Hopital): coefficient n is
// multiplied by (Nn)!, the a-side must round to integers, and b is rescaled
// so its n = 1 entry is exactly 1. Integer recovery is validated by rerunning
// with the perturbation shrunk 10 more orders.
SeqPair grassmann_pair(long N, long n_max, long P);

// lim b_{Nn}/a_{Nn} of the deresonation-normalized pair: the limit of
// (1/N) B^dr_n / A^dr_n, which Thm-4.1-style targets equal pi^2/(N^2(N+1)).
ApproxLimit grassmann_apery_limit(long N, long n_max, long P);

struct LefschetzReport {
    std::string variety;
    long N = 0;
    Rat kappa_a;                // empirical a-side constant (exact once integral)
    Real kappa_b;               // empirical b-side constant
    long kappa_a_stable_n = 0;  // largest n with exact kappa_a match
    long kappa_b_agreed_digits = 0;
    Real constant_ratio;        // (variety Apery constant) / (Grassmannian constant)
    Real expected_ratio;
    bool ok = false;

    nlohmann::json to_json() const;
};

// Quantum Lefschetz consistency: a^variety_n * (factorial rescaling) against
// a^{G(2,N)}_{Nn}, constants fixed empirically from n = 1 and checked over
// n <= n_max; Apery-constant ratio checked against 5/2 (V10) and 6 (V14).
LefschetzReport lefschetz_crosscheck(const std::string& variety, long n_max, long P);

namespace detail {

struct GrassmannData {
    long N = 0;
    long k = 0;            // perturbation exponent: e = 10^-k
    long digits = 0;       // working precision used
    std::vector<Int> a;    // a_{Nn}
    std::vector<Real> a_residuals;
    std::vector<Rat> b;    // b'_n / b'_1 (so entry 1 is exactly 1)
    Rat b_first;           // empirical b'_1
    std::vector<Real> ratio;  // (1/N) B^dr_n / A^dr_n
};

GrassmannData grassmann_pipeline(long N, long n_max, long P, long k);

// Serial reference and OpenMP kernel for the Wronskian convolution.
WronskianSeries wronskian_serial(const PerturbedSeries& plus, const PerturbedSeries& minus,
                                 long n_max, const std::string& label);
WronskianSeries wronskian_omp(const PerturbedSeries& plus, const PerturbedSeries& minus,
                              long n_max, const std::string& label);

} // namespace detail

} // namespace aperylab

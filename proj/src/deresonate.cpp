#include "aperylab/deresonate.hpp"

#include <cmath>

#include "aperylab/constants.hpp"
#include "aperylab/parallel.hpp"
#include "aperylab/special.hpp"

namespace aperylab {

namespace {

Real real_pi_raw(long digits) {
    Real r(0L, digits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real sin_2pi(const Real& x) {
    return (real_pi_raw(x.digits()) * 2 * x).sin();
}

// decimal exponent of the perturbation size, e.g. 20 for e = 1e-20
long perturbation_exponent(const Real& e) {
    long ex = e.abs().exponent10();
    return ex < 0 ? -ex : 1;
}

} // namespace

std::vector<Real> ExponentSet::exponents() const {
    long W = e.digits();
    Real half(Rat(1, 2), W);
    std::vector<Real> out = {half + e, half - e, half + u.to_digits(W), half - u.to_digits(W)};
    for (long m = 0; m < N - 4; ++m) out.push_back(half);
    return out;
}

ExponentSet make_exponents(long N, const Real& e, const Real& u) {
    if (N < 5) throw input_error("ExponentSet: N must be >= 5");
    if (e.is_zero() || u.is_zero()) throw input_error("ExponentSet: e and u must be nonzero");
    if (e == u || e == -u) throw input_error("ExponentSet: e = +-u is resonant");
    Real quarter(Rat(1, 4), 24);
    if (!(e.abs().to_digits(24) < quarter) || !(u.abs().to_digits(24) < quarter))
        throw input_error("ExponentSet: need |e|, |u| < 1/4");
    return ExponentSet{N, e, u};
}

PerturbedSeries perturbed_series(const ExponentSet& exps, const Real& alpha, long n_max, long P) {
    const long W = P;
    Real a = alpha.to_digits(W);
    std::vector<Real> als;
    for (const Real& x : exps.exponents()) als.push_back(x.to_digits(W));
    {
        bool member = false;
        for (const Real& x : als)
            if (x == a) member = true;
        if (!member) throw input_error("perturbed_series: alpha not in the exponent set");
    }

    // g(0) = 1/prod_j Gamma(alpha - alpha_j + 1); the alpha_j = alpha factor is Gamma(1) = 1
    Real g0(1L, W);
    for (const Real& aj : als) {
        if (aj == a) continue;  // exactly one self-factor
        Real arg = a - aj + Real(1L, W);
        if (arg.sign() <= 0) throw input_error("perturbed_series: resonant Gamma argument");
        g0 = g0 / gamma_real(arg, W);
    }

    PerturbedSeries out;
    out.alpha = a;
    out.prec = W;
    out.coeffs.reserve(static_cast<size_t>(n_max) + 1);
    out.coeffs.push_back(g0);
    Real tiny = Real(10L, 24).pow_si(-(W - 8));
    for (long n = 1; n <= n_max; ++n) {
        Real prod(1L, W);
        for (const Real& aj : als) {
            Real f = a - aj + Real(n, W);
            if (f.abs().to_digits(24) < tiny)
                throw input_error("perturbed_series: resonance at n = " + std::to_string(n));
            prod *= f;
        }
        out.coeffs.push_back(-out.coeffs.back() / prod);
    }
    return out;
}

namespace detail {

namespace {

WronskianSeries wronskian_impl(const PerturbedSeries& plus, const PerturbedSeries& minus,
                               long n_max, const std::string& label, bool parallel) {
    const long W = plus.prec;
    Real one(1L, W);
    Real sum_alpha = plus.alpha + minus.alpha;
    if ((sum_alpha - one).abs().to_digits(24) > Real(10L, 24).pow_si(-(W - 8)))
        throw input_error("wronskian: exponents must satisfy alpha_+ + alpha_- = 1");
    if (static_cast<long>(plus.coeffs.size()) <= n_max ||
        static_cast<long>(minus.coeffs.size()) <= n_max)
        throw input_error("wronskian: not enough series coefficients");

    Real delta = minus.alpha - plus.alpha;
    WronskianSeries out;
    out.label = label;
    out.coeffs.assign(static_cast<size_t>(n_max) + 1, Real(0L, W));
    out.term_scale_e10.assign(static_cast<size_t>(n_max) + 1, 0);

    auto row = [&](long n) {
        Real acc(0L, W);
        long max_e10 = -1000000000L;
        for (long k = 0; k <= n; ++k) {
            long m = n - k;
            Real term = (Real(m - k, W) + delta) * plus.coeffs[static_cast<size_t>(k)] *
                        minus.coeffs[static_cast<size_t>(m)];
            if (!term.is_zero()) max_e10 = std::max(max_e10, term.exponent10());
            acc += term;
        }
        out.coeffs[static_cast<size_t>(n)] = acc;
        out.term_scale_e10[static_cast<size_t>(n)] = max_e10;
    };
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long n = 0; n <= n_max; ++n) row(n);
#else
    (void)parallel;
    for (long n = 0; n <= n_max; ++n) row(n);
#endif
    return out;
}

} // namespace

WronskianSeries wronskian_serial(const PerturbedSeries& plus, const PerturbedSeries& minus,
                                 long n_max, const std::string& label) {
    return wronskian_impl(plus, minus, n_max, label, false);
}

WronskianSeries wronskian_omp(const PerturbedSeries& plus, const PerturbedSeries& minus,
                              long n_max, const std::string& label) {
    return wronskian_impl(plus, minus, n_max, label, true);
}

} // namespace detail

long WronskianSeries::cancellation_digits(long n) const {
    const Real& v = coeffs[static_cast<size_t>(n)];
    if (v.is_zero()) return 1000000;
    return std::max(0L, term_scale_e10[static_cast<size_t>(n)] - v.exponent10());
}

WronskianSeries wronskian(const PerturbedSeries& plus, const PerturbedSeries& minus, long n_max,
                          const std::string& label) {
    return parallel_enabled() ? detail::wronskian_omp(plus, minus, n_max, label)
                              : detail::wronskian_serial(plus, minus, n_max, label);
}

namespace {

struct WronskianPair {
    WronskianSeries r_e, r_u;
};

WronskianPair build_wronskians(const ExponentSet& exps, long n_max, long W) {
    ExponentSet ew{exps.N, exps.e.to_digits(W), exps.u.to_digits(W)};
    Real half(Rat(1, 2), W);
    PerturbedSeries se = perturbed_series(ew, half + ew.e, n_max, W);
    PerturbedSeries sme = perturbed_series(ew, half - ew.e, n_max, W);
    PerturbedSeries su = perturbed_series(ew, half + ew.u, n_max, W);
    PerturbedSeries smu = perturbed_series(ew, half - ew.u, n_max, W);
    return {wronskian(se, sme, n_max, "R_e"), wronskian(su, smu, n_max, "R_u")};
}

} // namespace

nlohmann::json SineReport::to_json() const {
    return {{"N", N},
            {"e", e.str(20)},
            {"u", u.str(20)},
            {"limit", limit.value.str()},
            {"error_estimate", limit.error_estimate.str(3)},
            {"n_used", limit.n_used},
            {"target", target.str()},
            {"work_digits", work_digits},
            {"status", ok ? "ok" : "mismatch"}};
}

SineReport sine_ratio_check(const ExponentSet& exps, long n_max, long P) {
    const long Pq = std::max(P, 16L);
    long n_run = std::min(n_max, 80L);
    long W = Pq + 100;
    for (int attempt = 0;; ++attempt) {
        WronskianPair wp = build_wronskians(exps, n_run, W);
        // drop indices where cancellation ate the requested resolution
        std::vector<Real> ratios;
        bool degraded = false;
        for (long n = 0; n <= n_run; ++n) {
            long honest = W - std::max(wp.r_e.cancellation_digits(n), wp.r_u.cancellation_digits(n));
            if (honest < Pq + 25) {
                degraded = true;
                break;
            }
            if (wp.r_u.coeffs[static_cast<size_t>(n)].is_zero()) {
                degraded = true;
                break;
            }
            ratios.push_back(wp.r_e.coeffs[static_cast<size_t>(n)] /
                             wp.r_u.coeffs[static_cast<size_t>(n)]);
        }
        if (!degraded) {
            try {
                ApproxLimit lim = estimate_limit(ratios, Pq, LimitMethod::plain_ratio, 0);
                Real target = sin_2pi(exps.e.to_digits(W)) / sin_2pi(exps.u.to_digits(W));
                SineReport rep;
                rep.N = exps.N;
                rep.e = exps.e;
                rep.u = exps.u;
                rep.limit = lim;
                rep.target = target.to_digits(Pq + 10);
                rep.n_cap = n_max;
                rep.work_digits = W;
                Real diff = (lim.value.to_digits(W) - target).abs().to_digits(24);
                rep.ok = diff <= lim.error_estimate || diff.is_zero();
                return rep;
            } catch (const error&) {
                // fall through to escalation
            }
        }
        if (attempt >= 4)
            throw precision_error("sine_ratio_check: precision budget exhausted");
        if (n_run < n_max) n_run = std::min(n_max, n_run * 2);
        W = W + W / 2 + static_cast<long>(0.7 * static_cast<double>(exps.N) * n_run);
    }
}

Real perturbed_apery_constant(const ExponentSet& exps, long P) {
    long k = std::max(perturbation_exponent(exps.e), perturbation_exponent(exps.u));
    long W = 4 * k + P + 60;
    WronskianPair wp = build_wronskians(exps, 1, W);
    const Real& re0 = wp.r_e.coeffs[0];
    const Real& re1 = wp.r_e.coeffs[1];
    const Real& ru0 = wp.r_u.coeffs[0];
    const Real& ru1 = wp.r_u.coeffs[1];
    Real sine_ratio = sin_2pi(exps.u.to_digits(W)) / sin_2pi(exps.e.to_digits(W));
    Real num = sine_ratio * re0 * re0 - ru0 * re0;
    Real den = ru1 * re0 - re1 * ru0;
    if (den.is_zero() || num.is_zero())
        throw precision_error("perturbed_apery_constant: degenerate Wronskian data");
    // cancellation sanity: the result must retain P digits
    long den_loss = std::max(0L, std::max(ru1.exponent10() + re0.exponent10(),
                                          re1.exponent10() + ru0.exponent10()) -
                                  den.exponent10());
    if (W - den_loss - 4 * k < P)
        throw precision_error("perturbed_apery_constant: precision exhausted by cancellation");
    return ((num / den) / exps.N).to_digits(P);
}

ApproxLimit pac_limit(long N, long P) {
    if (N < 5) throw input_error("pac_limit: N must be >= 5");
    const long step = 3;
    long k = std::max(8L, P / 2 + 2);
    const long W = P + 20;
    Real prev(0L, W);
    bool have_prev = false;
    for (long iter = 0; iter < 12; ++iter, k += step) {
        Real e = Real(10L, 4 * k + P + 60).pow_si(-k);
        Real u = e * 2;
        Real v = perturbed_apery_constant(make_exponents(N, e, u), P + 8);
        if (have_prev && agreed_digits(prev, v) >= P) {
            Real err = (prev - v).abs().to_digits(24) * Real(10L, 24).pow_si(-2 * step) * 4;
            return ApproxLimit{v.to_digits(P), err, k, LimitMethod::plain_ratio};
        }
        prev = v;
        have_prev = true;
    }
    throw precision_error("pac_limit: perturbation schedule did not stabilize");
}

namespace detail {

GrassmannData grassmann_pipeline_impl(long N, long n_max, long P, long k) {
    const double log10N = std::log10(static_cast<double>(N));
    const long maxlog =
        static_cast<long>(std::ceil(static_cast<double>(N * n_max) * log10N)) + n_max + 10;
    const long resid_digits = std::max(P / 2, 12L);
    if (k <= 0) k = (resid_digits + maxlog) / 2 + 14;
    const long conv_loss = static_cast<long>(std::ceil(0.63 * static_cast<double>(N * n_max)));
    const long W = 4 * k + maxlog + conv_loss + std::max(P, 20L) + 120;

    Real e = Real(10L, W).pow_si(-k);
    Real u = e * 2;
    WronskianPair wp = build_wronskians(make_exponents(N, e, u), n_max, W);

    GrassmannData out;
    out.N = N;
    out.k = k;
    out.digits = W;
    const Real& re0 = wp.r_e.coeffs[0];
    const Real& ru0 = wp.r_u.coeffs[0];
    Real den = re0 * wp.r_u.coeffs[1] - ru0 * wp.r_e.coeffs[1];
    if (den.is_zero()) throw precision_error("grassmann: B-normalization denominator vanished");

    std::vector<Real> Adr, Bdr;
    for (long n = 0; n <= n_max; ++n) {
        Adr.push_back(wp.r_e.coeffs[static_cast<size_t>(n)] / re0);
        Bdr.push_back((re0 * wp.r_u.coeffs[static_cast<size_t>(n)] -
                       ru0 * wp.r_e.coeffs[static_cast<size_t>(n)]) /
                      den);
    }

    Real tol = Real(10L, 24).pow_si(-resid_digits);
    std::vector<Real> bprime;
    for (long n = 0; n <= n_max; ++n) {
        Real fac(factorial(static_cast<unsigned long>(N * n)), W);
        Real a_val = Adr[static_cast<size_t>(n)] * fac;
        Int a_int = a_val.round_to_int();
        Real resid = (a_val - Real(a_int, W)).abs();
        if (!(resid.to_digits(24) < tol))
            throw precision_error("grassmann: a_{" + std::to_string(N) + "*" + std::to_string(n) +
                                  "} integrality residual " + resid.str(3));
        out.a.push_back(a_int);
        out.a_residuals.push_back(resid.to_digits(24));
        bprime.push_back(Bdr[static_cast<size_t>(n)] * fac / N);
        if (n >= 1)
            out.ratio.push_back(Bdr[static_cast<size_t>(n)] / Adr[static_cast<size_t>(n)] / N);
        else
            out.ratio.push_back(Real(0L, W));
    }

    // b'_1 empirically equals (N-1)!; reconstruct rather than assume
    Int max_den = pow_int(Int(10), 24);
    auto b1 = reconstruct_rational(bprime[1], max_den, resid_digits);
    if (!b1) throw precision_error("grassmann: b'_1 not recognizably rational");
    out.b_first = *b1;
    for (long n = 0; n <= n_max; ++n) {
        auto bn = reconstruct_rational(bprime[static_cast<size_t>(n)] / Real(out.b_first, W),
                                       max_den, resid_digits);
        if (!bn)
            throw precision_error("grassmann: b_" + std::to_string(n) +
                                  " not recognizably rational at this precision");
        out.b.push_back(*bn);
    }
    return out;
}

GrassmannData grassmann_pipeline(long N, long n_max, long P, long k) {
    return grassmann_pipeline_impl(N, n_max, P, k);
}

} // namespace detail

SeqPair grassmann_pair(long N, long n_max, long P) {
    if (N < 5) throw input_error("grassmann_pair: N must be >= 5");
    detail::GrassmannData d1 = detail::grassmann_pipeline(N, n_max, P, 0);
    // pipeline stability: shrinking the perturbation ten more orders must
    // reproduce the same integers and rationals
    detail::GrassmannData d2 = detail::grassmann_pipeline(N, n_max, P, d1.k + 10);
    for (long n = 0; n <= n_max; ++n) {
        if (!(d1.a[static_cast<size_t>(n)] == d2.a[static_cast<size_t>(n)]))
            throw precision_error("grassmann_pair: recovered a_{Nn} unstable under perturbation shrink");
        if (!(d1.b[static_cast<size_t>(n)] == d2.b[static_cast<size_t>(n)]))
            throw precision_error("grassmann_pair: recovered b_n unstable under perturbation shrink");
    }
    SeqPair pair;
    pair.variety = "G(2," + std::to_string(N) + ")";
    for (const Int& v : d1.a) pair.a.push_back(Rat(v));
    pair.b = d1.b;
    pair.normalization = {Rat(1), 1, Rat(1)};
    return pair;
}

ApproxLimit grassmann_apery_limit(long N, long n_max, long P) {
    if (N < 5) throw input_error("grassmann_apery_limit: N must be >= 5");
    detail::GrassmannData d = detail::grassmann_pipeline(N, n_max, P + 8, 0);
    return estimate_limit(d.ratio, P, LimitMethod::plain_ratio, 1);
}

nlohmann::json LefschetzReport::to_json() const {
    return {{"variety", variety},
            {"N", N},
            {"kappa_a", kappa_a.str()},
            {"kappa_b", kappa_b.str(30)},
            {"kappa_a_stable_n", kappa_a_stable_n},
            {"kappa_b_agreed_digits", kappa_b_agreed_digits},
            {"constant_ratio", constant_ratio.str(30)},
            {"expected_ratio", expected_ratio.str(30)},
            {"status", ok ? "ok" : "mismatch"}};
}

LefschetzReport lefschetz_crosscheck(const std::string& variety, long n_max, long P) {
    long N;
    if (variety == "V10") N = 5;
    else if (variety == "V14") N = 6;
    else throw input_error("lefschetz_crosscheck: only V10 and V14 have Grassmannian partners");

    LefschetzReport rep;
    rep.variety = variety;
    rep.N = N;

    // the Apery-constant ratio needs a longer horizon than the kappa window
    // (V14 converges at ~1.4 digits per step)
    const long n_lim = std::max(n_max, 26L);
    SeqPair mukai = apery_pair(variety, n_lim);
    detail::GrassmannData g = detail::grassmann_pipeline(N, n_lim, P + 12, 0);
    const long W = g.digits;

    // factorial rescaling: V10 uses (n!)^3 (2n)!/(5n)!, V14 uses (n!)^6/(6n)!
    auto rescale = [&](long n) -> Rat {
        Int num = N == 5 ? pow_int(factorial(static_cast<unsigned long>(n)), 3) *
                               factorial(static_cast<unsigned long>(2 * n))
                         : pow_int(factorial(static_cast<unsigned long>(n)), 6);
        Int den = factorial(static_cast<unsigned long>(N * n));
        return Rat(num, den);
    };

    // kappa_a(n) = a^V_n / (f(n) a^G_{Nn}) must be constant; exact arithmetic.
    rep.kappa_a = mukai.a[1] / (rescale(1) * Rat(g.a[1]));
    rep.kappa_a_stable_n = 1;
    for (long n = 1; n <= n_max; ++n) {
        Rat kn = mukai.a[static_cast<size_t>(n)] / (rescale(n) * Rat(g.a[static_cast<size_t>(n)]));
        if (kn == rep.kappa_a) rep.kappa_a_stable_n = n;
        else break;
    }

    // kappa_b from n=1, stability measured in digits over n <= n_max
    std::vector<Real> kb;
    for (long n = 1; n <= n_max; ++n) {
        Real bG = Real(g.b[static_cast<size_t>(n)] * g.b_first, W);  // b'_n
        if (bG.is_zero()) continue;
        Real bV(mukai.b[static_cast<size_t>(n)], W);
        kb.push_back(bV / (Real(rescale(n), W) * bG));
    }
    rep.kappa_b = kb.front().to_digits(P);
    long worst = 1000000000L;
    for (size_t i = 1; i < kb.size(); ++i)
        worst = std::min(worst, agreed_digits(kb.front(), kb[i]));
    rep.kappa_b_agreed_digits = worst;

    // Apery-constant ratio: (variety constant)/(Grassmannian constant),
    // pinned at 20+ digits (the n_max terms support ~22 digits for N = 6)
    const long P_lim = 22;
    ApproxLimit vlim = apery_limit(mukai, P_lim);
    ApproxLimit glim = estimate_limit(g.ratio, P_lim, LimitMethod::plain_ratio, 1);
    rep.constant_ratio = (vlim.value.to_digits(P_lim + 4) / glim.value.to_digits(P_lim + 4)).to_digits(P);
    rep.expected_ratio = Real(N == 5 ? Rat(5, 2) : Rat(6), P);
    rep.ok = rep.kappa_a_stable_n == n_max && rep.kappa_b_agreed_digits >= P - 10 &&
             agreed_digits(rep.constant_ratio, rep.expected_ratio) >= std::min(P - 2, 20L);
    return rep;
}

} // namespace aperylab

#include "aperylab/special.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "aperylab/parallel.hpp"

namespace aperylab {
namespace detail {

namespace {

Real real_pi(long digits) {
    Real r(0L, digits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

// |x| < 10^-tol_exp
bool below_tol(const Real& x, long tol_exp) {
    return x.is_zero() || x.exponent10() < -tol_exp;
}

} // namespace

// Euler-Maclaurin for zeta(s, a) = sum_{k>=0} (k+a)^{-s}:
//   sum_{k=0}^{N-1}(k+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//     + sum_{j>=1} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * (N+a)^{1-s-2j}
// The error is bounded by the first omitted correction term. At s = 0 the
// rising factorial kills every correction and the finite part collapses to
// the continued value 1/2 - a.
Real hurwitz_em(long s, const Rat& a, long W) {
    if (!(s >= 2 || s == 0)) throw input_error("hurwitz_em: need s >= 2 or s = 0");
    if (!(a.sign() > 0 && a <= Rat(1))) throw input_error("hurwitz_em: need 0 < a <= 1");
    if (s == 0) return Real(Rat(1, 2) - a, W);

    const long N = std::max(2 * W, 50L);
    Real sum(0L, W);
    for (long k = 0; k < N; ++k) sum += Real(Rat(k) + a, W).pow_si(-s);

    Real Na(Rat(N) + a, W);
    sum += Na.pow_si(1 - s) / (s - 1);
    sum += Na.pow_si(-s) / 2;

    // rising = s(s+1)...(s+2j-2), a (2j-1)-factor product
    Real rising(s, W);
    Real Na_pow = Na.pow_si(1 - s - 2);
    Real Na2 = Na * Na;
    Real prev_mag(0L, W);
    bool shrinking_checked = false;
    for (unsigned long j = 1;; ++j) {
        Rat bfac = bernoulli(2 * j) / Rat(factorial(2 * j));
        Real term = Real(bfac, W) * rising * Na_pow;
        sum += term;
        Real mag = term.abs();
        if (below_tol(mag, W + 5)) break;
        if (shrinking_checked && mag > prev_mag)
            throw precision_error("hurwitz_em: Bernoulli tail diverging before tolerance");
        prev_mag = mag;
        shrinking_checked = true;
        rising = rising * (s + 2 * static_cast<long>(j) - 1) * (s + 2 * static_cast<long>(j));
        Na_pow = Na_pow / Na2;
        if (j > 4 * static_cast<unsigned long>(W))
            throw precision_error("hurwitz_em: tail failed to reach tolerance");
    }
    return sum;
}

Real zeta_em(long s, long W) { return hurwitz_em(s, Rat(1), W); }

// Borwein's algorithm for eta(s) = sum (-1)^{n-1} n^{-s}:
//   d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
//   eta(s) ~ -1/d_n * sum_{k<n} (-1)^k (d_k - d_n) (k+1)^{-s}
// with |error| <= 3/(3+sqrt 8)^n * |1 - 2^{1-s}|^{-1}; zeta = eta/(1-2^{1-s}).
Real zeta_alternating(long s, long W) {
    if (s < 2) throw input_error("zeta_alternating: need s >= 2");
    const long n = static_cast<long>(std::ceil(1.31 * static_cast<double>(W))) + 8;
    // t_i = (n+i-1)! 4^i / ((n-i)! (2i)!), built by the stepwise ratio
    // t_i/t_{i-1} = 4(n+i-1)(n-i+1)/((2i)(2i-1)); exact rationals throughout.
    Rat t(1, static_cast<long>(n));  // t_0 normalized so that d_k = n * sum t_i
    Rat acc = t;
    std::vector<Rat> dr(static_cast<size_t>(n) + 1);
    dr[0] = Rat(static_cast<long>(n)) * acc;
    for (long i = 1; i <= n; ++i) {
        t *= Rat(4 * (n + i - 1)) * Rat(n - i + 1, 1);
        t = t / Rat(2 * i * (2 * i - 1));
        acc += t;
        dr[static_cast<size_t>(i)] = Rat(static_cast<long>(n)) * acc;
    }
    Real dn(dr[static_cast<size_t>(n)], W);
    Real sum(0L, W);
    for (long k = 0; k < n; ++k) {
        Real part = Real(dr[static_cast<size_t>(k)] - dr[static_cast<size_t>(n)], W) *
                    Real(Rat(k + 1), W).pow_si(-s);
        if (k % 2 == 0) sum -= part;
        else sum += part;
    }
    Real eta = sum / dn;
    Real denom = Real(1L, W) - Real(Rat(1, 2).pow(s - 1), W);  // 1 - 2^{1-s}
    return eta / denom;
}

namespace {
std::mutex g_zeta_cache_mutex;
std::map<long, Real> g_zeta_cache;
} // namespace

Real zeta_cached(long s, long W) {
    {
        std::lock_guard lock(g_zeta_cache_mutex);
        auto it = g_zeta_cache.find(s);
        if (it != g_zeta_cache.end() && it->second.digits() >= W) return it->second.to_digits(W);
    }
    Real v(0L, W);
    if (s > static_cast<long>(3.4 * static_cast<double>(W)) + 8) {
        // zeta(s) - 1 ~ 2^{-s}: a handful of direct terms suffice
        v = Real(1L, W);
        for (long k = 2; k <= 4; ++k) v += Real(Rat(k), W).pow_si(-s);
    } else {
        v = zeta_em(s, W);
    }
    std::lock_guard lock(g_zeta_cache_mutex);
    auto it = g_zeta_cache.find(s);
    if (it == g_zeta_cache.end() || it->second.digits() < W) g_zeta_cache.insert_or_assign(s, v);
    return v;
}

// Direct grouped character sum sum_m [(3m+1)^{-s} - (3m+2)^{-s}] with the
// integral tail bound (3M-2)^{-s}/3 < 10^{-digits}. Feasible only at modest
// precision; this is the independent verification route, not the workhorse.
Real chi3_direct(long s, long digits) {
    if (s < 2) throw input_error("chi3_direct: need s >= 2");
    if (digits > 18) throw input_error("chi3_direct: direct route capped at 18 digits");
    const long W = digits + 12;
    double Md = std::pow(10.0, static_cast<double>(digits + 2) / static_cast<double>(s)) / 3.0 + 2.0;
    const long M = static_cast<long>(Md) + 2;

    const long block = 8192;
    const long nblocks = (M + block - 1) / block;
    std::vector<Real> partial(static_cast<size_t>(nblocks), Real(0L, W));
    // Each block is summed serially in index order and blocks are folded in
    // order, so the parallel and serial paths produce identical results.
#ifdef _OPENMP
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(dynamic) if (par)
    for (long b = 0; b < nblocks; ++b) {
        Real acc(0L, W);
        const long lo = b * block, hi = std::min(M, lo + block);
        for (long m = lo; m < hi; ++m) {
            acc += Real(Rat(3 * m + 1), W).pow_si(-s);
            acc -= Real(Rat(3 * m + 2), W).pow_si(-s);
        }
        partial[static_cast<size_t>(b)] = acc;
    }
#else
    for (long b = 0; b < nblocks; ++b) {
        Real acc(0L, W);
        const long lo = b * block, hi = std::min(M, lo + block);
        for (long m = lo; m < hi; ++m) {
            acc += Real(Rat(3 * m + 1), W).pow_si(-s);
            acc -= Real(Rat(3 * m + 2), W).pow_si(-s);
        }
        partial[static_cast<size_t>(b)] = acc;
    }
#endif
    Real sum(0L, W);
    for (const Real& p : partial) sum += p;
    return sum;
}

} // namespace detail

Real zeta_int(long s, long P) {
    if (!(s >= 2 || s == 0)) throw input_error("zeta_int: unsupported s");
    if (s == 0) {
        // continuation formula, asserted against the exact value as a tripwire
        Real cont = detail::hurwitz_em(0, Rat(1), P + 10);
        if (!(cont == Real(Rat(-1, 2), P + 10)))
            throw precision_error("zeta_int: continuation at s=0 drifted from -1/2");
        return Real(Rat(-1, 2), P);
    }
    Real v = certified(P, 2 * P + 50, [s](long W) { return detail::zeta_em(s, W); });
    Real alt = detail::zeta_alternating(s, P + 10);
    if (agreed_digits(v.to_digits(P + 10), alt) < P)
        throw precision_error("zeta_int: Euler-Maclaurin and alternating routes disagree");
    return v;
}

Real hurwitz_zeta(long s, const Rat& a, long P) {
    if (!(s >= 2 || s == 0)) throw input_error("hurwitz_zeta: unsupported s");
    if (!(a.sign() > 0 && a <= Rat(1))) throw input_error("hurwitz_zeta: need 0 < a <= 1");
    if (s == 0) return Real(Rat(1, 2) - a, P);
    return certified(P, 2 * P + 50, [&](long W) { return detail::hurwitz_em(s, a, W); });
}

Real chi3_L(long s, long P) {
    if (!(s >= 2 || s == 0)) throw input_error("chi3_L: unsupported s");
    if (s == 0) {
        Real cont = (detail::hurwitz_em(0, Rat(1, 3), P + 10) - detail::hurwitz_em(0, Rat(2, 3), P + 10));
        if (!(cont == Real(Rat(1, 3), P + 10)))
            throw precision_error("chi3_L: continuation at s=0 drifted from 1/3");
        return Real(Rat(1, 3), P);
    }
    Real v = certified(P, 2 * P + 50, [s](long W) {
        Real d = detail::hurwitz_em(s, Rat(1, 3), W) - detail::hurwitz_em(s, Rat(2, 3), W);
        return Real(Rat(1, 3).pow(s), W) * d;
    });
    // Independent route: direct summation, feasible to ~15 digits.
    long check_digits = std::min(P, 14L);
    Real direct = detail::chi3_direct(s, check_digits);
    if (agreed_digits(v.to_digits(direct.digits()), direct) < check_digits - 1)
        throw precision_error("chi3_L: direct-summation cross-check failed");
    return v;
}

Real log_gamma_one_minus(const Real& t, long P) {
    Real half(Rat(1, 2), t.digits());
    if (!(t.abs() < half)) throw input_error("log_gamma_one_minus: need |t| < 1/2");
    if (t.is_zero()) return Real(0L, P);
    // terms zeta(i)/i t^i decay like |t|^i
    return certified(P, 4 * P + 50, [&](long W) {
        Real tw = t.to_digits(W);
        Real gamma_c(0L, W);
        mpfr_const_euler(gamma_c.raw(), MPFR_RNDN);
        Real sum = gamma_c * tw;
        Real tp = tw * tw;
        for (long i = 2;; ++i) {
            Real term = detail::zeta_cached(i, W) * tp / i;
            sum += term;
            if (detail::below_tol(tp.abs() / i, W + 5)) break;
            tp *= tw;
            if (i > 40 * W) throw precision_error("log_gamma_one_minus: series too slow");
        }
        return sum;
    });
}

Real gamma_real(const Real& x, long P) {
    if (x.sign() <= 0) throw input_error("gamma_real: need x > 0");
    // Exact shortcuts at the resonant base points: integers and half-integers.
    {
        Real two_x = x * 2;
        if (mpfr_integer_p(two_x.raw()) && two_x < Real(20000L, 32)) {
            long m2 = two_x.round_to_int().to_long();
            if (m2 % 2 == 0) {
                return certified(P, 0, [&](long W) {
                    return Real(Rat(factorial(static_cast<unsigned long>(m2 / 2 - 1))), W);
                });
            }
            // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!)
            long m = (m2 - 1) / 2;
            return certified(P, 0, [&](long W) {
                Rat c(factorial(static_cast<unsigned long>(2 * m)),
                      pow_int(Int(4), static_cast<unsigned long>(m)) *
                          factorial(static_cast<unsigned long>(m)));
                return Real(c, W) * detail::real_pi(W).sqrt();
            });
        }
    }
    return certified(P, 2 * P + 50, [&](long W) {
        const long Wi = W + 18;
        Real xw = x.to_digits(Wi);
        // Shift into the Stirling regime: exp(-2 pi z) below 10^{-Wi}.
        long zmin = static_cast<long>(std::ceil(0.3666 * static_cast<double>(Wi))) + 8;
        long M = 0;
        if (xw < Real(zmin, Wi)) M = zmin - static_cast<long>(xw.to_double()) + 1;
        Real z = xw + Real(M, Wi);
        // log Gamma(z) = (z - 1/2) log z - z + log(2 pi)/2
        //             + sum_j B_{2j} / ((2j)(2j-1) z^{2j-1})
        Real lg = (z - Real(Rat(1, 2), Wi)) * z.log() - z;
        Real two_pi = detail::real_pi(Wi) * 2;
        lg += two_pi.log() / 2;
        Real zpow = z;  // z^{2j-1}
        Real z2 = z * z;
        Real prev_mag(0L, Wi);
        bool started = false;
        for (unsigned long j = 1;; ++j) {
            Rat coef = bernoulli(2 * j) / Rat(2 * static_cast<long>(j) * (2 * static_cast<long>(j) - 1));
            Real term = Real(coef, Wi) / zpow;
            lg += term;
            Real mag = term.abs();
            if (detail::below_tol(mag, Wi)) break;
            if (started && mag > prev_mag)
                throw precision_error("gamma_real: Stirling tail diverging before tolerance");
            prev_mag = mag;
            started = true;
            zpow *= z2;
            if (j > 2 * static_cast<unsigned long>(Wi))
                throw precision_error("gamma_real: Stirling tail failed to converge");
        }
        Real g = lg.exp();
        for (long i = 0; i < M; ++i) g = g / (xw + Real(i, Wi));
        return g;
    });
}

Real l_value(const LValueRequest& req) {
    switch (req.kind) {
        case LValueRequest::Kind::zeta: return zeta_int(req.s, req.prec);
        case LValueRequest::Kind::hurwitz: return hurwitz_zeta(req.s, req.a, req.prec);
        case LValueRequest::Kind::chi3: return chi3_L(req.s, req.prec);
    }
    throw input_error("l_value: unknown kind");
}

Real gamma_pm_product(const Real& x, const Real& d, long P) {
    long W = P + guard_digits(0) + 8;
    Real xw = x.to_digits(W), dw = d.to_digits(W);
    Real pi = detail::real_pi(W);
    if (xw == Real(Rat(1, 2), W)) {
        // Gamma(1/2+d) Gamma(1/2-d) = pi / cos(pi d)
        return (pi / (pi * dw).cos()).to_digits(P);
    }
    if (xw == Real(1L, W)) {
        if (dw.is_zero()) return Real(1L, P);
        // Gamma(1+d) Gamma(1-d) = pi d / sin(pi d)
        return (pi * dw / (pi * dw).sin()).to_digits(P);
    }
    return (gamma_real(xw + dw, W) * gamma_real(xw - dw, W)).to_digits(P);
}

} // namespace aperylab

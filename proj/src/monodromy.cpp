#include "aperylab/monodromy.hpp"

#include <algorithm>
#include <set>

namespace aperylab {

namespace {

using RMat = std::vector<std::vector<Real>>;
using CVec = std::vector<Complex>;

Real pow10_small(long e) { return Real(10L, 24).pow_si(e); }

RMat rmat_identity(long n, long W) {
    RMat m(static_cast<size_t>(n), std::vector<Real>(static_cast<size_t>(n), Real(0L, W)));
    for (long i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Real(1L, W);
    return m;
}

RMat rmat_mul(const RMat& a, const RMat& b) {
    size_t n = a.size();
    long W = a[0][0].digits();
    RMat c(n, std::vector<Real>(n, Real(0L, W)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

CVec cmat_apply(const RMat& m, const CVec& v) {
    size_t n = m.size();
    CVec out(n, Complex::zero(v[0].digits()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            out[i].re += m[i][j] * v[j].re;
            out[i].im += m[i][j] * v[j].im;
        }
    return out;
}

// Gaussian elimination with partial pivoting and a pivot tolerance. Gram
// matrices of resonant-at-infinity frames are genuinely singular (e.g.
// N = 5, e = 1/10 has rank 3), but G x = w stays consistent there and any
// particular solution yields the same pairings (G x is what enters them),
// so the wedge route may pass allow_singular and zero the free variables.
CVec solve_real_complex(RMat A, CVec b, long tol_digits, bool allow_singular) {
    const size_t n = A.size();
    const long W = b[0].digits();
    Real tol = pow10_small(-tol_digits);
    std::vector<long> pivot_of_col(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t best = row;
        for (size_t r = row + 1; r < n; ++r)
            if (A[r][col].abs() > A[best][col].abs()) best = r;
        if (A[best][col].abs().to_digits(24) < tol) {
            if (!allow_singular)
                throw input_error("monodromy: Gram matrix not invertible at this tolerance");
            continue;  // free column, variable pinned to zero
        }
        if (best != row) {
            std::swap(A[best], A[row]);
            std::swap(b[best], b[row]);
        }
        pivot_of_col[col] = static_cast<long>(row);
        for (size_t r = row + 1; r < n; ++r) {
            Real f = A[r][col] / A[row][col];
            if (f.is_zero()) continue;
            for (size_t j = col; j < n; ++j) A[r][j] -= f * A[row][j];
            b[r].re -= f * b[row].re;
            b[r].im -= f * b[row].im;
        }
        ++row;
    }
    // rows without pivots must be consistent: 0 = rhs
    for (size_t r = row; r < n; ++r)
        if (b[r].abs().to_digits(24) > tol)
            throw precision_error("monodromy: singular system inconsistent");
    CVec x(n, Complex::zero(W));
    for (size_t col = n; col-- > 0;) {
        if (pivot_of_col[col] < 0) continue;
        size_t r = static_cast<size_t>(pivot_of_col[col]);
        Complex s = b[r];
        for (size_t j = col + 1; j < n; ++j) {
            s.re -= A[r][j] * x[j].re;
            s.im -= A[r][j] * x[j].im;
        }
        x[col] = {s.re / A[r][col], s.im / A[r][col]};
    }
    return x;
}

Real cvec_norm(const CVec& v) {
    Real s(0L, v[0].digits());
    for (const Complex& z : v) s += z.norm2();
    return s.sqrt();
}

Real sin_2pi_w(const Real& x, long W) {
    Real pi(0L, W);
    mpfr_const_pi(pi.raw(), MPFR_RNDN);
    return (pi * 2 * x.to_digits(W)).sin();
}

} // namespace

std::vector<Real> h_expansion(const std::vector<Real>& alphas, long N, long order, long P) {
    if (static_cast<long>(alphas.size()) != N) throw input_error("h_expansion: need N exponents");
    const long W = P + 25;
    // denominator prod (1 - z_j y) as exact complex polynomial coefficients
    std::vector<Complex> den(1, Complex(Real(1L, W)));
    for (const Real& a : alphas) {
        Complex z = unit_phase(a.to_digits(W));
        std::vector<Complex> nxt(den.size() + 1, Complex::zero(W));
        for (size_t i = 0; i < den.size(); ++i) {
            nxt[i] += den[i];
            nxt[i + 1] -= den[i] * z;
        }
        den = std::move(nxt);
    }
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex::zero(W));
    for (long n = 0; n <= order; ++n) {
        Complex s = Complex::zero(W);
        if (n == 0) s.re = Real(1L, W);
        if (n == N) s.re -= Real(1L, W);
        for (long k = 1; k <= n && k < static_cast<long>(den.size()); ++k)
            s -= den[static_cast<size_t>(k)] * c[static_cast<size_t>(n - k)];
        c[static_cast<size_t>(n)] = s;  // den[0] = 1
    }
    std::vector<Real> out;
    Real tol = pow10_small(-P);
    for (long n = 0; n <= order; ++n) {
        Real im = c[static_cast<size_t>(n)].im.abs().to_digits(24);
        Real scale = c[static_cast<size_t>(n)].re.abs().to_digits(24);
        if (scale < Real(1L, 24)) scale = Real(1L, 24);
        if (im > tol * scale)
            throw input_error("h_expansion: imaginary residue at c_" + std::to_string(n) +
                              " (exponent multiset not symmetric under a <-> 1-a)");
        out.push_back(c[static_cast<size_t>(n)].re);
    }
    return out;
}

HypFrame gram_matrix(const std::vector<Real>& alphas, long N, long P) {
    HypFrame f;
    f.N = N;
    f.digits = P + 25;
    for (const Real& a : alphas) f.alphas.push_back(a.to_digits(f.digits));
    f.c = h_expansion(f.alphas, N, N, P);
    f.G.assign(static_cast<size_t>(N), std::vector<Real>(static_cast<size_t>(N), Real(0L, f.digits)));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            f.G[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                i == j ? Real(2L, f.digits) : f.c[static_cast<size_t>(std::labs(i - j))];
    f.e = Real(0L, f.digits);
    f.u = Real(0L, f.digits);
    return f;
}

HypFrame standard_frame(long N, const Real& e, const Real& u, long P, bool perturb_tail) {
    if (N < 5) throw input_error("standard_frame: N must be >= 5");
    const long W = P + 25;
    Real half(Rat(1, 2), W);
    Real ew = e.to_digits(W), uw = u.to_digits(W);
    std::vector<Real> alphas = {half - ew, half + ew, half - uw, half + uw};
    long rest = N - 4;
    if (perturb_tail) {
        Real base = ew.abs();
        if (uw.abs() < base) base = uw.abs();
        long m = 1;
        while (rest >= 2) {
            Real w = base / (2 * m + 3);
            alphas.push_back(half - w);
            alphas.push_back(half + w);
            rest -= 2;
            ++m;
        }
    }
    while (rest-- > 0) alphas.push_back(half);
    HypFrame f = gram_matrix(alphas, N, P);
    f.e = ew;
    f.u = uw;
    return f;
}

std::vector<std::vector<Real>> reflection(const HypFrame& frame, long j) {
    if (j < 1 || j > frame.N) throw input_error("reflection: index out of range");
    const long W = frame.digits;
    RMat R = rmat_identity(frame.N, W);
    // (R x)_b = x_b - delta_{bj} sum_a G_{aj} x_a
    size_t jj = static_cast<size_t>(j - 1);
    for (size_t a = 0; a < static_cast<size_t>(frame.N); ++a)
        R[jj][a] -= frame.G[a][jj];
    return R;
}

namespace {

// candidate orderings: cyclic shifts of 1..N and their reversals
std::vector<std::vector<long>> candidate_orderings(long N) {
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> out;
    for (long s = 0; s < N; ++s) {
        std::vector<long> cyc;
        for (long t = 0; t < N; ++t) cyc.push_back((s + t) % N + 1);
        std::vector<long> rev(cyc.rbegin(), cyc.rend());
        for (auto& o : {cyc, rev})
            if (seen.insert(o).second) out.push_back(o);
    }
    return out;
}

} // namespace

EigenReport infinity_monodromy_eigencheck(const HypFrame& frame, long P) {
    const long N = frame.N;
    const long W = frame.digits;
    Real tol = pow10_small(-(P - 15));

    // Vandermonde eigen-candidates through the dual basis: e_i = G^{-1} w_i,
    // (w_i)_j = z_i^j for j = 1..N
    std::vector<CVec> vecs;
    for (long i = 0; i < N; ++i) {
        Complex z = unit_phase(frame.alphas[static_cast<size_t>(i)]);
        CVec w(static_cast<size_t>(N), Complex::zero(W));
        Complex p(Real(1L, W));
        for (long j = 0; j < N; ++j) {
            p = p * z;
            w[static_cast<size_t>(j)] = p;
        }
        vecs.push_back(solve_real_complex(frame.G, w, P, false));
    }

    EigenReport best;
    best.N = N;
    for (const auto& ord : candidate_orderings(N)) {
        RMat M = rmat_identity(N, W);
        for (long j : ord) M = rmat_mul(M, reflection(frame, j));
        std::vector<Real> residuals;
        std::vector<Complex> lambdas;
        bool all_ok = true;
        for (const CVec& ev : vecs) {
            CVec Me = cmat_apply(M, ev);
            size_t idx = 0;
            Real mx(0L, W);
            for (size_t t = 0; t < ev.size(); ++t) {
                Real a = ev[t].abs();
                if (a > mx) {
                    mx = a;
                    idx = t;
                }
            }
            Complex lam = Me[idx] / ev[idx];
            CVec diff(ev.size(), Complex::zero(W));
            for (size_t t = 0; t < ev.size(); ++t) diff[t] = Me[t] - lam * ev[t];
            Real res = (cvec_norm(diff) / cvec_norm(ev)).to_digits(24);
            Real unit_dev = (lam.abs() - Real(1L, W)).abs().to_digits(24);
            residuals.push_back(res);
            lambdas.push_back(lam);
            if (!(res < tol) || !(unit_dev < tol)) all_ok = false;
        }
        if (all_ok) {
            best.ordering = ord;
            best.residuals = residuals;
            best.lambdas = lambdas;
            best.ok = true;
            return best;
        }
        if (best.residuals.empty()) {
            best.ordering = ord;
            best.residuals = residuals;
            best.lambdas = lambdas;
        }
    }
    best.ok = false;
    return best;
}

nlohmann::json EigenReport::to_json(const Real& e, const Real& u) const {
    nlohmann::json res = nlohmann::json::array();
    for (const Real& r : residuals) res.push_back(r.str(3));
    return {{"N", N},       {"e", e.str(20)},      {"u", u.str(20)},
            {"ordering", ordering}, {"residuals", res}, {"status", ok ? "ok" : "no-ordering"}};
}

WedgeFrame wedge_frame(const HypFrame& frame) {
    WedgeFrame w;
    w.N = frame.N;
    for (long i = 0; i < frame.N; ++i)
        for (long j = i + 1; j < frame.N; ++j) w.basis.emplace_back(i, j);
    const size_t dim = w.basis.size();
    const long W = frame.digits;
    w.form.assign(dim, std::vector<Real>(dim, Real(0L, W)));
    for (size_t p = 0; p < dim; ++p)
        for (size_t q = 0; q < dim; ++q) {
            auto [i, j] = w.basis[p];
            auto [k, l] = w.basis[q];
            w.form[p][q] = frame.G[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                               frame.G[static_cast<size_t>(j)][static_cast<size_t>(l)] -
                           frame.G[static_cast<size_t>(i)][static_cast<size_t>(l)] *
                               frame.G[static_cast<size_t>(j)][static_cast<size_t>(k)];
        }
    return w;
}

std::vector<std::vector<Real>> semiorthogonal_form(const HypFrame& frame) {
    const long W = frame.digits;
    RMat B(static_cast<size_t>(frame.N), std::vector<Real>(static_cast<size_t>(frame.N), Real(0L, W)));
    for (long i = 0; i < frame.N; ++i)
        for (long j = 0; j < frame.N; ++j) {
            if (i == j) B[static_cast<size_t>(i)][static_cast<size_t>(j)] = Real(1L, W);
            else if (i < j) B[static_cast<size_t>(i)][static_cast<size_t>(j)] = frame.G[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    return B;
}

WedgeReport wedge_coefficient_identity(const HypFrame& frame, const Real& e, const Real& u, long P) {
    const long N = frame.N;
    const long W = frame.digits;
    Real half(Rat(1, 2), W);
    Real ew = e.to_digits(W), uw = u.to_digits(W);
    {
        Real tol = pow10_small(-(W - 20));
        const std::vector<Real> want = {half - ew, half + ew, half - uw, half + uw};
        for (size_t i = 0; i < 4; ++i)
            if ((frame.alphas[i] - want[i]).abs().to_digits(24) > tol)
                throw input_error("wedge_coefficient_identity: first four alphas must be 1/2-+e, 1/2-+u");
    }

    // The Vandermonde expansion through the dual basis fixes the pairings
    // (e_i, v_k) = z_i^k; the V^_12 component of e_i ^ e_j is their 2x2
    // minor at (v_1, v_2).
    std::vector<CVec> pairings;
    for (long i = 0; i < 4; ++i) {
        Complex z = unit_phase(frame.alphas[static_cast<size_t>(i)]);
        CVec w(static_cast<size_t>(N), Complex::zero(W));
        Complex p(Real(1L, W));
        for (long j = 0; j < N; ++j) {
            p = p * z;
            w[static_cast<size_t>(j)] = p;
        }
        pairings.push_back(std::move(w));
    }
    auto kappa = [&](const CVec& x, const CVec& y) { return x[0] * y[1] - x[1] * y[0]; };
    Complex k12 = kappa(pairings[0], pairings[1]);
    Complex k34 = kappa(pairings[2], pairings[3]);
    if (k34.abs().is_zero()) throw precision_error("wedge_coefficient_identity: kappa_34 vanished");

    // When the Gram matrix is invertible, reconstruct e_i = G^{-1} w_i and
    // check that G e_i reproduces the pairings (the numeric dual-basis leg).
    Real recon_residual(0L, 24);
    try {
        for (long i = 0; i < 4; ++i) {
            CVec ei = solve_real_complex(frame.G, pairings[static_cast<size_t>(i)], P, false);
            for (long k = 0; k < N; ++k) {
                Complex s = Complex::zero(W);
                for (long b = 0; b < N; ++b) {
                    s.re += frame.G[static_cast<size_t>(b)][static_cast<size_t>(k)] *
                            ei[static_cast<size_t>(b)].re;
                    s.im += frame.G[static_cast<size_t>(b)][static_cast<size_t>(k)] *
                            ei[static_cast<size_t>(b)].im;
                }
                Real dev = (s - pairings[static_cast<size_t>(i)][static_cast<size_t>(k)]).abs()
                               .to_digits(24);
                if (dev > recon_residual) recon_residual = dev;
            }
        }
    } catch (const input_error&) {
        // resonant-at-infinity frames have singular G; the component data
        // above stays well-defined, so only the reconstruction leg is skipped
    }

    Complex ratio = k12 / k34;
    Real target = sin_2pi_w(ew, W) / sin_2pi_w(uw, W);

    WedgeReport rep;
    rep.N = N;
    rep.kappa_ratio = ratio.re.to_digits(P);
    rep.target = target.to_digits(P);
    Real ratio_res = ((ratio.re - target).abs() + ratio.im.abs()).to_digits(24);
    if (recon_residual > ratio_res) ratio_res = recon_residual;
    rep.ratio_residual = ratio_res;
    Complex vanish = sin_2pi_w(uw, W) * k12 - sin_2pi_w(ew, W) * k34;
    rep.vanish_residual = vanish.abs().to_digits(24);
    Real tol = pow10_small(-(P - 10));
    rep.ok = ratio_res < tol && rep.vanish_residual < tol;
    return rep;
}

nlohmann::json WedgeReport::to_json(const Real& e, const Real& u) const {
    return {{"N", N},
            {"e", e.str(20)},
            {"u", u.str(20)},
            {"kappa_ratio", kappa_ratio.str()},
            {"target", target.str()},
            {"ratio_residual", ratio_residual.str(3)},
            {"vanish_residual", vanish_residual.str(3)},
            {"status", ok ? "ok" : "mismatch"}};
}

} // namespace aperylab

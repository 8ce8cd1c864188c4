#include "doctest.h"

#include "aperylab/constants.hpp"
#include "aperylab/deresonate.hpp"
#include "aperylab/monodromy.hpp"

using namespace aperylab;

namespace {
Real pw10(long e) { return Real(10L, 24).pow_si(e); }

Real mat_norm_diff(const std::vector<std::vector<Real>>& A,
                   const std::vector<std::vector<Real>>& B) {
    Real s(0L, A[0][0].digits());
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j) {
            Real d = A[i][j] - B[i][j];
            s += d * d;
        }
    return s.sqrt();
}

std::vector<std::vector<Real>> mat_mul(const std::vector<std::vector<Real>>& A,
                                       const std::vector<std::vector<Real>>& B) {
    size_t n = A.size();
    std::vector<std::vector<Real>> C(n, std::vector<Real>(n, Real(0L, A[0][0].digits())));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

// determinant by elimination, enough for these small matrices
Real det(std::vector<std::vector<Real>> A) {
    size_t n = A.size();
    Real d(1L, A[0][0].digits());
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; ++r)
            if (A[r][c].abs() > A[piv][c].abs()) piv = r;
        if (piv != c) {
            std::swap(A[piv], A[c]);
            d = -d;
        }
        d *= A[c][c];
        if (A[c][c].is_zero()) return d;
        for (size_t r = c + 1; r < n; ++r) {
            Real f = A[r][c] / A[c][c];
            for (size_t j = c; j < n; ++j) A[r][j] -= f * A[c][j];
        }
    }
    return d;
}
} // namespace

TEST_CASE("h_expansion basics and the degenerate check") {
    const long P = 45;
    // fully resonant formal point: all alphas 1/2 gives H = (1-y^N)/(1+y)^N
    std::vector<Real> halves(5, Real(Rat(1, 2), P + 25));
    std::vector<Real> c = h_expansion(halves, 5, 5, P);
    CHECK(agreed_digits(c[0], Real(1L, P)) >= P - 2);
    CHECK(agreed_digits(c[1], Real(-5L, P)) >= P - 2);

    // independent rebuild: H(y) * prod(1 - z_j y) = 1 - y^N
    Real e(Rat(1, 11), P + 25), u(Rat(1, 14), P + 25);
    HypFrame f = standard_frame(5, e, u, P);
    std::vector<Complex> prod{Complex(Real(1L, f.digits))};
    for (const Real& a : f.alphas) {
        Complex z = unit_phase(a);
        std::vector<Complex> nxt(prod.size() + 1, Complex::zero(f.digits));
        for (size_t i = 0; i < prod.size(); ++i) {
            nxt[i] += prod[i];
            nxt[i + 1] -= prod[i] * z;
        }
        prod = std::move(nxt);
    }
    for (long n = 0; n <= 5; ++n) {
        Complex acc = Complex::zero(f.digits);
        for (long k = 0; k <= n && k < static_cast<long>(prod.size()); ++k) {
            acc.re += prod[static_cast<size_t>(k)].re * f.c[static_cast<size_t>(n - k)];
            acc.im += prod[static_cast<size_t>(k)].im * f.c[static_cast<size_t>(n - k)];
        }
        Real want = n == 0 ? Real(1L, f.digits) : (n == 5 ? Real(-1L, f.digits) : Real(0L, f.digits));
        CHECK((acc.re - want).abs().to_digits(24) < pw10(-(P - 5)));
        CHECK(acc.im.abs().to_digits(24) < pw10(-(P - 5)));
    }

    // asymmetric multiset must be rejected
    std::vector<Real> bad = {Real(Rat(1, 3), P + 25), Real(Rat(1, 2), P + 25),
                             Real(Rat(1, 2), P + 25), Real(Rat(1, 2), P + 25),
                             Real(Rat(1, 2), P + 25)};
    CHECK_THROWS_AS(h_expansion(bad, 5, 5, P), input_error);
}

TEST_CASE("gram matrix shape") {
    const long P = 40;
    HypFrame f = standard_frame(5, Real(Rat(1, 11), P + 25), Real(Rat(1, 14), P + 25), P);
    for (long i = 0; i < 5; ++i) CHECK(f.G[static_cast<size_t>(i)][static_cast<size_t>(i)] == Real(2L, f.digits));
    CHECK(f.G[0][2] == f.c[2]);
    for (long i = 0; i < 5; ++i)
        for (long j = 0; j < 5; ++j)
            CHECK(f.G[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                  f.G[static_cast<size_t>(j)][static_cast<size_t>(i)]);
}

TEST_CASE("reflections") {
    const long P = 40;
    HypFrame f = standard_frame(5, Real(Rat(1, 11), P + 25), Real(Rat(1, 14), P + 25), P);
    for (long j = 1; j <= 5; ++j) {
        auto R = reflection(f, j);
        // involution
        auto R2 = mat_mul(R, R);
        std::vector<std::vector<Real>> I(5, std::vector<Real>(5, Real(0L, f.digits)));
        for (size_t t = 0; t < 5; ++t) I[t][t] = Real(1L, f.digits);
        CHECK(mat_norm_diff(R2, I).to_digits(24) < pw10(-(P - 2)));
        // R v_j = -v_j
        std::vector<Real> vj(5, Real(0L, f.digits));
        vj[static_cast<size_t>(j - 1)] = Real(1L, f.digits);
        for (size_t r = 0; r < 5; ++r) {
            Real acc(0L, f.digits);
            for (size_t c2 = 0; c2 < 5; ++c2) acc += R[r][c2] * vj[c2];
            CHECK((acc + vj[r]).abs().to_digits(24) < pw10(-(P - 2)));
        }
        // det = -1
        CHECK(agreed_digits(det(R), Real(-1L, f.digits)) >= P - 2);
        // form preservation: R^T G R = G
        std::vector<std::vector<Real>> Rt(5, std::vector<Real>(5, Real(0L, f.digits)));
        for (size_t a = 0; a < 5; ++a)
            for (size_t b = 0; b < 5; ++b) Rt[a][b] = R[b][a];
        CHECK(mat_norm_diff(mat_mul(Rt, mat_mul(f.G, R)), f.G).to_digits(24) < pw10(-(P - 4)));
    }
    CHECK_THROWS_AS(reflection(f, 0), input_error);
    CHECK_THROWS_AS(reflection(f, 6), input_error);
}

TEST_CASE("infinity monodromy eigencheck") {
    const long P = 45;
    HypFrame f5 = standard_frame(5, Real(Rat(1, 11), P + 25), Real(Rat(1, 14), P + 25), P);
    EigenReport rep = infinity_monodromy_eigencheck(f5, P);
    CHECK(rep.ok);
    CHECK(rep.ordering == std::vector<long>{1, 2, 3, 4, 5});
    for (const Real& r : rep.residuals) CHECK(r < pw10(-(P - 15)));
    for (const Complex& lam : rep.lambdas)
        CHECK((lam.abs() - Real(1L, f5.digits)).abs().to_digits(24) < pw10(-(P - 15)));

    // N=2 sanity frame via the generic constructor: alphas {1/3, 2/3}
    std::vector<Real> a2 = {Real(Rat(1, 3), P + 25), Real(Rat(2, 3), P + 25)};
    HypFrame f2 = gram_matrix(a2, 2, P);
    EigenReport rep2 = infinity_monodromy_eigencheck(f2, P);
    CHECK(rep2.ok);

    // N=6 with the perturbed tail is admissible too
    HypFrame f6 = standard_frame(6, Real(Rat(1, 11), P + 25), Real(Rat(1, 14), P + 25), P);
    CHECK(infinity_monodromy_eigencheck(f6, P).ok);

    // resonant at infinity (5 * 1/10 = 1/2): the Gram matrix degenerates and
    // the invertibility precondition fires
    HypFrame bad = standard_frame(5, Real(Rat(1, 10), P + 25), Real(Rat(1, 14), P + 25), P);
    CHECK_THROWS_AS(infinity_monodromy_eigencheck(bad, P), input_error);
}

TEST_CASE("wedge frame reproduces the determinant expansion") {
    const long P = 40;
    HypFrame f = standard_frame(5, Real(Rat(1, 11), P + 25), Real(Rat(1, 14), P + 25), P);
    WedgeFrame w = wedge_frame(f);
    CHECK(w.basis.size() == 10);
    for (size_t p = 0; p < w.basis.size(); ++p)
        for (size_t q = 0; q < w.basis.size(); ++q) {
            auto [i, j] = w.basis[p];
            auto [k, l] = w.basis[q];
            Real expect = f.G[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                              f.G[static_cast<size_t>(j)][static_cast<size_t>(l)] -
                          f.G[static_cast<size_t>(i)][static_cast<size_t>(l)] *
                              f.G[static_cast<size_t>(j)][static_cast<size_t>(k)];
            CHECK(w.form[p][q] == expect);
        }

    // the semiorthogonal form symmetrizes back to G
    auto B = semiorthogonal_form(f);
    for (long i = 0; i < 5; ++i)
        for (long j = 0; j < 5; ++j) {
            Real sym = B[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                       B[static_cast<size_t>(j)][static_cast<size_t>(i)];
            CHECK(agreed_digits(sym, f.G[static_cast<size_t>(i)][static_cast<size_t>(j)]) > 1000);
        }
}

TEST_CASE("wedge coefficient identity") {
    const long P = 50;
    Real e(Rat(1, 10), P + 25), u(Rat(1, 14), P + 25);
    HypFrame f = standard_frame(5, e, u, P);
    WedgeReport rep = wedge_coefficient_identity(f, e, u, P);
    CHECK(rep.ok);
    CHECK(rep.ratio_residual < pw10(-(P - 10)));
    CHECK(rep.vanish_residual < pw10(-(P - 10)));
    // sin(pi/5)/sin(pi/7)
    Real target = (pi_real(P + 10) / 5).sin() / (pi_real(P + 10) / 7).sin();
    CHECK(agreed_digits(rep.kappa_ratio.to_digits(P + 10), target) >= P - 10);

    // a couple of N=6 frames
    for (auto [pe, pu] : {std::pair<long, long>{9, 13}, {11, 17}}) {
        Real ee(Rat(1, pe), P + 25), uu(Rat(1, pu), P + 25);
        HypFrame f6 = standard_frame(6, ee, uu, P);
        CHECK(wedge_coefficient_identity(f6, ee, uu, P).ok);
    }

    CHECK_THROWS_AS(wedge_coefficient_identity(f, u, e, P), input_error);
}

TEST_CASE("wedge ratio equals the deresonation sine limit") {
    const long P = 40;
    Real e(Rat(1, 8), P + 25), u(Rat(1, 12), P + 25);
    HypFrame f = standard_frame(5, e, u, P);
    WedgeReport wr = wedge_coefficient_identity(f, e, u, P);
    REQUIRE(wr.ok);
    ExponentSet exps = make_exponents(5, Real(Rat(1, 8), 60), Real(Rat(1, 12), 60));
    SineReport sr = sine_ratio_check(exps, 160, 16);
    REQUIRE(sr.ok);
    CHECK(agreed_digits(wr.kappa_ratio.to_digits(30), sr.limit.value.to_digits(30)) >= 14);
}

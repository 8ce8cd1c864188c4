#include <random>

#include "doctest.h"

#include "aperylab/constants.hpp"
#include "aperylab/special.hpp"

using namespace aperylab;

TEST_CASE("zeta at integer arguments") {
    Real z2 = zeta_int(2, 20);
    Real pi = pi_real(25);
    CHECK(agreed_digits(z2.to_digits(25), pi * pi / 6) >= 15);

    Real z3 = zeta_int(3, 20);
    CHECK(agreed_digits(z3, Real("1.2020569031595942854", 22)) >= 19);

    CHECK(zeta_int(0, 30) == Real(Rat(-1, 2), 30));
    CHECK_THROWS_AS(zeta_int(1, 20), input_error);
    CHECK_THROWS_AS(zeta_int(-3, 20), input_error);
}

TEST_CASE("dual-method agreement: Euler-Maclaurin vs alternating") {
    for (long s : {2, 3, 4, 5, 7, 11}) {
        Real em = detail::zeta_em(s, 60);
        Real alt = detail::zeta_alternating(s, 60);
        CHECK(agreed_digits(em, alt) >= 55);
    }
}

TEST_CASE("zeta against mpfr as a third route") {
    for (long s : {2, 3, 5, 6}) {
        Real mine = zeta_int(s, 45);
        Real theirs(0L, 50);
        mpfr_zeta_ui(theirs.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
        CHECK(agreed_digits(mine.to_digits(50), theirs) >= 44);
    }
}

TEST_CASE("hurwitz zeta") {
    CHECK(agreed_digits(hurwitz_zeta(2, Rat(1), 30), zeta_int(2, 30)) >= 29);
    // bisection: zeta(3, 1/2) = 7 zeta(3)
    CHECK(agreed_digits(hurwitz_zeta(3, Rat(1, 2), 30), zeta_int(3, 30) * 7) >= 29);
    // multiplication theorem at m = 4, s = 2
    Real sum = hurwitz_zeta(2, Rat(1, 4), 30) + hurwitz_zeta(2, Rat(1, 2), 30) +
               hurwitz_zeta(2, Rat(3, 4), 30) + hurwitz_zeta(2, Rat(1), 30);
    CHECK(agreed_digits(sum, zeta_int(2, 32) * 16) >= 28);
    CHECK(hurwitz_zeta(0, Rat(1, 3), 20) == Real(Rat(1, 6), 20));
    CHECK_THROWS_AS(hurwitz_zeta(2, Rat(3, 2), 20), input_error);
    CHECK_THROWS_AS(hurwitz_zeta(1, Rat(1, 2), 20), input_error);
}

TEST_CASE("L(chi_3, s)") {
    CHECK(agreed_digits(chi3_L(2, 12), Real("0.781302412896486", 16)) >= 12);
    CHECK(agreed_digits(chi3_L(3, 12), Real("0.884023811750080", 16)) >= 12);
    CHECK(chi3_L(0, 25) == Real(Rat(1, 3), 25));
    // direct grouped summation as the independent oracle
    Real direct = detail::chi3_direct(3, 13);
    CHECK(agreed_digits(chi3_L(3, 20).to_digits(direct.digits()), direct) >= 12);
    CHECK_THROWS_AS(chi3_L(1, 20), input_error);
}

TEST_CASE("log gamma of 1 - t") {
    CHECK(log_gamma_one_minus(Real(0L, 30), 30).is_zero());

    // reflection: log G(1-t) + log G(1+t) = log(pi t / sin(pi t))
    long P = 40;
    Real t(Rat(1, 7), P + 15);
    Real lhs = log_gamma_one_minus(t, P) + log_gamma_one_minus(-t, P);
    Real pi = pi_real(P + 15);
    Real rhs = (pi * t / (pi * t).sin()).log();
    CHECK(agreed_digits(lhs.to_digits(P + 15), rhs) >= P - 4);

    // leading behaviour at t = 1e-30: gamma t + zeta(2)/2 t^2 + ...
    Real tiny = Real(10L, 80).pow_si(-30);
    Real lg = log_gamma_one_minus(tiny, 50);
    Real expect = euler_gamma(80) * tiny + zeta_int(2, 80) * tiny * tiny / 2;
    CHECK(agreed_digits(lg.to_digits(80), expect) >= 45);

    CHECK_THROWS_AS(log_gamma_one_minus(Real(Rat(1, 2), 30), 30), input_error);
}

TEST_CASE("gamma function") {
    long P = 40;
    CHECK(gamma_real(Real(1L, P), P) == Real(1L, P));
    CHECK(gamma_real(Real(6L, P), P) == Real(120L, P));
    CHECK(agreed_digits(gamma_real(Real(Rat(1, 2), P), P).to_digits(P + 5),
                        pi_real(P + 5).sqrt()) >= P - 1);

    // functional equation on random x in (0.1, 10)
    std::mt19937_64 rng(11);
    for (int i = 0; i < 8; ++i) {
        Rat q(static_cast<long>(rng() % 990) + 10, 100);  // 0.10 .. 9.99
        Real x(q, P + 10);
        Real lhs = gamma_real(x + Real(1L, P + 10), P);
        Real rhs = x * gamma_real(x, P);
        CHECK(agreed_digits(lhs.to_digits(P + 10), rhs.to_digits(P + 10)) >= P - 2);
    }

    // reflection: G(1/2+e) G(1/2-e) cos(pi e)/pi = 1 on 20 random e in (0, 0.4)
    for (int i = 0; i < 20; ++i) {
        Rat q(static_cast<long>(rng() % 399) + 1, 1000);
        Real e(q, P + 10);
        Real prod = gamma_real(Real(Rat(1, 2), P + 10) + e, P) *
                    gamma_real(Real(Rat(1, 2), P + 10) - e, P);
        Real ref = prod * (pi_real(P + 10) * e).cos() / pi_real(P + 10);
        CHECK(agreed_digits(ref.to_digits(P + 10), Real(1L, P + 10)) >= P - 2);
    }

    CHECK_THROWS_AS(gamma_real(Real(0L, 20), 20), input_error);
    CHECK_THROWS_AS(gamma_real(Real(-3L, 20), 20), input_error);
}

TEST_CASE("gamma_pm_product reflection shortcuts") {
    long P = 40;
    // x = 1/2: pi / cos(pi d) at d = 1/10
    Real v = gamma_pm_product(Real(Rat(1, 2), P + 10), Real(Rat(1, 10), P + 10), P);
    Real ref = pi_real(P + 10) / (pi_real(P + 10) / 10).cos();
    CHECK(agreed_digits(v.to_digits(P + 10), ref) >= P - 2);
    // general x agrees with the two-evaluation route
    Real g = gamma_pm_product(Real(Rat(9, 10), P + 10), Real(Rat(1, 10), P + 10), P);
    Real direct = gamma_real(Real(1L, P + 10), P) * gamma_real(Real(Rat(8, 10), P + 10), P);
    CHECK(agreed_digits(g.to_digits(P + 10), direct.to_digits(P + 10)) >= P - 2);
}

TEST_CASE("gamma against mpfr as a third route") {
    for (long num : {7, 13, 29}) {
        Real x(Rat(num, 10), 45);
        Real mine = gamma_real(x, 40);
        Real theirs(0L, 45);
        mpfr_gamma(theirs.raw(), x.raw(), MPFR_RNDN);
        CHECK(agreed_digits(mine.to_digits(45), theirs) >= 39);
    }
}

TEST_CASE("exp(log gamma) consistency with gamma_real") {
    long P = 35;
    for (Rat q : {Rat(1, 10), Rat(3, 10), Rat(-3, 10)}) {
        Real t(q, P + 15);
        Real lhs = log_gamma_one_minus(t, P).to_digits(P + 15).exp();
        Real rhs = gamma_real(Real(1L, P + 15) - t, P);
        CHECK(agreed_digits(lhs, rhs.to_digits(P + 15)) >= P - 4);
    }
}

TEST_CASE("l_value dispatch") {
    LValueRequest req;
    req.kind = LValueRequest::Kind::chi3;
    req.s = 3;
    req.prec = 12;
    CHECK(agreed_digits(l_value(req), Real("0.884023811750080", 16)) >= 12);
}

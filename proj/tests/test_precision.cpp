#include <random>

#include "doctest.h"

#include "aperylab/constants.hpp"
#include "aperylab/rational.hpp"
#include "aperylab/real.hpp"
#include "test_oracles.hpp"

using namespace aperylab;

TEST_CASE("eval_poly") {
    PolyN cube({Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(eval_poly(cube, 2) == Rat(8));

    // 34n^3 - 51n^2 + 27n - 5 at n=1 gives the first Apery step a_1 = 5 a_0
    PolyN apery({Rat(-5), Rat(27), Rat(-51), Rat(34)});
    CHECK(eval_poly(apery, 1) == Rat(5));

    CHECK(eval_poly(PolyN(), 12345) == Rat(0));
}

TEST_CASE("polynomial algebra") {
    PolyN p({Rat(1), Rat(2)});   // 1 + 2n
    PolyN q({Rat(-3), Rat(1)});  // n - 3
    CHECK((p * q).coeffs() == std::vector<Rat>{Rat(-3), Rat(-5), Rat(2)});
    CHECK(p.shifted(Rat(-1)).eval(Rat(4)) == p.eval(Rat(3)));
    auto [v, d] = (p * p).eval_dual(Rat(2));
    CHECK(v == Rat(25));
    CHECK(d == Rat(20));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(3) == Rat(0));
    CHECK(bernoulli(12) == Rat(-691, 2730));

    // sum_{j<=k} C(k+1,j) B_j = 0 for k >= 1
    for (unsigned long k = 1; k <= 40; ++k) {
        Rat s(0);
        for (unsigned long j = 0; j <= k; ++j)
            s += Rat(binomial(static_cast<long>(k) + 1, static_cast<long>(j))) * bernoulli(j);
        CHECK(s == Rat(0));
    }
}

TEST_CASE("binomial and lcm_range") {
    CHECK(binomial(1, 1) == Int(1));
    CHECK(binomial(2, 1) == Int(2));
    CHECK(binomial(10, 5) == Int(252));
    CHECK(binomial(5, -1) == Int(0));
    CHECK(binomial(5, 6) == Int(0));
    // Pascal
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        long n = static_cast<long>(rng() % 60) + 1;
        long k = static_cast<long>(rng() % (n + 1));
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    CHECK(lcm_range(1) == Int(1));
    CHECK(lcm_range(6) == Int(60));
    CHECK(lcm_range(10) == Int(2520));
    CHECK_THROWS_AS(lcm_range(0), input_error);
}

TEST_CASE("pi against the Machin oracle") {
    Real p = pi_real(50);
    Real oracle = test_oracles::machin_pi(50);
    CHECK(agreed_digits(p, oracle) >= 49);
    CHECK(pi_real(10).str(10).substr(0, 11) == "3.141592654");
    CHECK(pi_real(1).str(1) == "3e0");
}

TEST_CASE("euler gamma against harmonic-minus-log") {
    Real g = euler_gamma(40);
    Real oracle = test_oracles::harmonic_gamma(40);
    CHECK(agreed_digits(g, oracle) >= 39);
    CHECK(euler_gamma(10).str(10).substr(0, 12) == "5.772156649e");
}

TEST_CASE("rational exactness on random big operands") {
    std::mt19937_64 rng(42);
    auto big = [&] {
        Int v(static_cast<long>(rng() % 1000000) + 1);
        return pow_int(v, 5) * Int(static_cast<long>(rng() % 97) + 1);
    };
    for (int i = 0; i < 40; ++i) {
        Rat q(big(), big());
        Rat r(big(), big());
        // (a/b + c/d) d b - (a d + c b) = 0
        Rat lhs = (q + r) * Rat(q.den() * r.den()) - Rat(q.num() * r.den() + r.num() * q.den());
        CHECK(lhs.is_zero());
        CHECK((q * r) / r == q);
        CHECK(q.den().sign() > 0);
    }
}

TEST_CASE("rational serialization") {
    CHECK(Rat(-22, 4).str() == "-11/2");
    CHECK(Rat(42).str() == "42");
    CHECK(Rat("117/8") == Rat(117, 8));
    CHECK(Rat("-5") == Rat(-5));
    CHECK_THROWS_AS(Rat("1/0"), input_error);
    CHECK_THROWS_AS(Rat("abc"), input_error);
}

TEST_CASE("real precision policy: P vs P+20 on random expressions") {
    std::mt19937_64 rng(1234);
    const long P = 45;
    auto expr = [&](long digits) {
        Real acc(1L, digits);
        std::mt19937_64 local(999);
        for (int i = 0; i < 60; ++i) {
            Rat c(static_cast<long>(local() % 2000) - 1000, static_cast<long>(local() % 50) + 1);
            Real x(c, digits);
            switch (local() % 4) {
                case 0: acc += x; break;
                case 1: acc -= x * x; break;
                case 2: acc *= (Real(1L, digits) + x * x); break;
                default: acc = acc / (Real(2L, digits) + x.abs() + acc.abs()); break;
            }
        }
        return acc.exp().log();   // a transcendental round-trip on top
    };
    (void)rng;
    Real lo = expr(P), hi = expr(P + 20);
    CHECK(agreed_digits(lo, hi) >= P - 2);
}

TEST_CASE("real serialization round-trips bit-exactly") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        Rat q(static_cast<long>(rng() % 1000000) + 1, static_cast<long>(rng() % 999) + 1);
        Real x(q, 50);
        if (rng() % 2) x = -x;
        Real back = Real::from_repr(x.repr());
        CHECK(back == x);
        CHECK(back.digits() == x.digits());
    }
    Real z(0L, 33);
    CHECK(Real::from_repr(z.repr()) == z);
}

TEST_CASE("certified recomputation policy") {
    CHECK(guard_digits(0) == 10);
    CHECK(guard_digits(999) == 40);
    Real v = certified(30, 100, [](long W) { return Real(Rat(2), W).sqrt(); });
    CHECK(v.digits() == 30);
    CHECK_THROWS_AS(certified(30, 0,
                              [](long W) {
                                  // deliberately precision-dependent garbage
                                  return Real(Rat(1, 3), W) + Real(10L, W).pow_si(-(W / 2));
                              }),
                    precision_error);
}

TEST_CASE("complex arithmetic") {
    Complex a(Real(3L, 40), Real(4L, 40));
    CHECK(a.abs().str(5).substr(0, 1) == "5");
    Complex b = a / a;
    CHECK(agreed_digits(b.re, Real(1L, 40)) > 35);
    CHECK(b.im.abs().to_digits(24) <= Real(10L, 24).pow_si(-35));
    Complex w = unit_phase(Real(Rat(1, 4), 40));  // exp(pi i / 2) = i
    CHECK(w.re.abs().to_digits(24) <= Real(10L, 24).pow_si(-35));
    CHECK(agreed_digits(w.im, Real(1L, 40)) > 35);
}

TEST_CASE("rational reconstruction") {
    Real x(Rat(23625, 4), 60);
    auto r = reconstruct_rational(x, pow_int(Int(10), 12), 40);
    REQUIRE(r.has_value());
    CHECK(*r == Rat(23625, 4));
    // a value that is not close to any small rational
    Real g = Real(2L, 60).sqrt();
    auto miss = reconstruct_rational(g, Int(1000), 40);
    CHECK(!miss.has_value());
}

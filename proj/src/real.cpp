#include "aperylab/real.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

namespace aperylab {

long Real::digits_to_bits(long digits) {
    if (digits < 1) digits = 1;
    // 1 decimal digit ~ 3.3219 bits; a small pad absorbs conversion slop.
    return static_cast<long>(std::ceil(digits * 3.3219280948873626)) + 16;
}

Real::Real(long digits) : digits_(digits) { mpfr_init2(x_, digits_to_bits(digits)); }

Real::Real(long v, long digits) : Real(digits) { mpfr_set_si(x_, v, MPFR_RNDN); }

Real::Real(const Int& v, long digits) : Real(digits) { mpfr_set_z(x_, v.raw(), MPFR_RNDN); }

Real::Real(const Rat& q, long digits) : Real(digits) { mpfr_set_q(x_, q.raw(), MPFR_RNDN); }

Real::Real(const std::string& s, long digits) : Real(digits) {
    if (mpfr_set_str(x_, s.c_str(), 10, MPFR_RNDN) != 0 && !s.empty() && s != "nan") {
        // mpfr_set_str returns nonzero only on parse failure
        mpfr_clear(x_);
        throw input_error("Real: cannot parse \"" + s + "\"");
    }
}

Real::Real(const Real& o) : digits_(o.digits_) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
}

Real& Real::operator=(Real o) noexcept {
    mpfr_swap(x_, o.x_);
    std::swap(digits_, o.digits_);
    return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::to_digits(long digits) const {
    Real r(digits);
    mpfr_set(r.x_, x_, MPFR_RNDN);
    return r;
}

#define APERYLAB_REAL_BINOP(op, fn)                                  \
    Real operator op(const Real& a, const Real& b) {                \
        Real r(Real::pair_digits(a, b));                            \
        fn(r.x_, a.x_, b.x_, MPFR_RNDN);                            \
        return r;                                                   \
    }
APERYLAB_REAL_BINOP(+, mpfr_add)
APERYLAB_REAL_BINOP(-, mpfr_sub)
APERYLAB_REAL_BINOP(*, mpfr_mul)
APERYLAB_REAL_BINOP(/, mpfr_div)
#undef APERYLAB_REAL_BINOP

Real Real::operator-() const {
    Real r(digits_);
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& b) { mpfr_add(x_, x_, b.x_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& b) { mpfr_sub(x_, x_, b.x_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& b) { mpfr_mul(x_, x_, b.x_, MPFR_RNDN); return *this; }

Real operator*(const Real& a, long b) {
    Real r(a.digits_);
    mpfr_mul_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b) {
    Real r(a.digits_);
    mpfr_div_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

Real Real::abs() const { Real r(digits_); mpfr_abs(r.x_, x_, MPFR_RNDN); return r; }
Real Real::sqrt() const { Real r(digits_); mpfr_sqrt(r.x_, x_, MPFR_RNDN); return r; }
Real Real::exp() const { Real r(digits_); mpfr_exp(r.x_, x_, MPFR_RNDN); return r; }
Real Real::log() const {
    if (sign() <= 0) throw input_error("Real::log: argument must be positive");
    Real r(digits_);
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
}
Real Real::sin() const { Real r(digits_); mpfr_sin(r.x_, x_, MPFR_RNDN); return r; }
Real Real::cos() const { Real r(digits_); mpfr_cos(r.x_, x_, MPFR_RNDN); return r; }
Real Real::atan() const { Real r(digits_); mpfr_atan(r.x_, x_, MPFR_RNDN); return r; }

Real Real::pow_si(long e) const {
    Real r(digits_);
    mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    return r;
}

Real Real::root(unsigned long n) const {
    if (sign() < 0) throw input_error("Real::root: negative radicand");
    Real r(digits_);
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r.x_, x_, n, MPFR_RNDN);
#else
    mpfr_root(r.x_, x_, n, MPFR_RNDN);
#endif
    return r;
}

Int Real::round_to_int() const {
    Real t(digits_);
    mpfr_round(t.x_, x_);
    Int r;
    mpfr_get_z(r.raw(), t.x_, MPFR_RNDN);
    return r;
}

long Real::exponent10() const {
    if (is_zero() || is_nan()) return 0;
    mpfr_exp_t e2 = mpfr_get_exp(x_);
    return static_cast<long>(std::floor(static_cast<double>(e2) * 0.30102999566398120));
}

std::string Real::str(long sd) const {
    if (is_nan()) return "nan";
    if (is_zero()) return "0";
    if (sd <= 0) sd = digits_ + 9;  // enough decimal digits for exact round-trip
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sd), x_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    bool neg = !m.empty() && m[0] == '-';
    std::string digs = neg ? m.substr(1) : m;
    // strip trailing zeros but keep at least one digit
    size_t last = digs.find_last_not_of('0');
    digs = digs.substr(0, std::max<size_t>(last + 1, 1));
    std::string out = neg ? "-" : "";
    out += digs.substr(0, 1);
    if (digs.size() > 1) out += "." + digs.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

Real::Repr Real::repr() const {
    Repr r;
    r.prec = digits_;
    if (is_zero()) {
        r.digits = mpfr_signbit(x_) ? "-0" : "0";
        r.exponent = 0;
        return r;
    }
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits_ + 9), x_, MPFR_RNDN);
    r.digits = s;
    mpfr_free_str(s);
    r.exponent = static_cast<long>(e);
    return r;
}

Real Real::from_repr(const Repr& r) {
    if (r.digits == "0" || r.digits == "-0") return Real(0L, r.prec);
    std::string s = r.digits;
    bool neg = !s.empty() && s[0] == '-';
    std::string digs = neg ? s.substr(1) : s;
    std::string text = (neg ? "-0." : "0.") + digs + "e" + std::to_string(r.exponent);
    return Real(text, r.prec);
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

long agreed_digits(const Real& a, const Real& b) {
    if (mpfr_equal_p(a.raw(), b.raw())) return 1000000000L;
    Real d = (a - b).abs();
    Real m = a.abs();
    Real mb = b.abs();
    if (mb > m) m = mb;
    if (m.is_zero()) return 1000000000L;
    // digits of agreement = log10(scale / |a-b|)
    long da = m.exponent10() - d.exponent10();
    return da > 0 ? da : 0;
}

long guard_digits(long n_terms) {
    if (n_terms < 0) n_terms = 0;
    return 10 + static_cast<long>(std::ceil(10.0 * std::log10(1.0 + static_cast<double>(n_terms))));
}

Real certified(long P, long n_terms, const std::function<Real(long)>& fn) {
    long G = guard_digits(n_terms);
    Real lo = fn(P + G);
    Real hi = fn(P + 2 * G);
    if (agreed_digits(lo, hi) < P)
        throw precision_error("certified: recomputation at P+2G disagrees beyond P digits");
    return hi.to_digits(P);
}

Complex operator/(const Complex& a, const Complex& b) {
    Real n2 = b.norm2();
    if (n2.is_zero()) throw input_error("Complex: division by zero");
    Complex num = a * b.conj();
    return {num.re / n2, num.im / n2};
}

Complex unit_phase(const Real& t) {
    long d = t.digits();
    Real two_pi_t(0L, d);
    mpfr_const_pi(two_pi_t.raw(), MPFR_RNDN);
    two_pi_t = two_pi_t * 2 * t;
    return {two_pi_t.cos(), two_pi_t.sin()};
}

std::optional<Rat> reconstruct_rational(const Real& x, const Int& max_den, long tol_digits) {
    if (x.is_nan()) return std::nullopt;
    Rat exact;
    mpfr_get_q(exact.raw(), x.raw());
    Real scale = x.abs();
    if (scale < Real(1L, 24)) scale = Real(1L, 24);
    Real tol = scale * Real(10L, 24).pow_si(-tol_digits);

    // continued-fraction convergents p_k/q_k of the exact binary value
    Int p0(1), q0(0);        // p_{-1}/q_{-1}
    Int p1, q1(1);           // p_0/q_0 = floor(x)
    mpz_fdiv_q(p1.raw(), exact.num().raw(), exact.den().raw());
    Rat rem = exact - Rat(p1);
    for (int iter = 0; iter < 20000; ++iter) {
        Rat cand(p1, q1);
        if ((Real(exact - cand, 24)).abs() <= tol) {
            if (q1 <= max_den) return cand;
            return std::nullopt;
        }
        if (rem.is_zero()) break;
        Rat inv = Rat(1) / rem;
        Int a;
        mpz_fdiv_q(a.raw(), inv.num().raw(), inv.den().raw());
        rem = inv - Rat(a);
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        p0 = p1; q0 = q1;
        p1 = p2; q1 = q2;
        if (q1 > max_den) break;
    }
    Rat cand(p1, q1);
    if (q1 <= max_den && (Real(exact - cand, 24)).abs() <= tol) return cand;
    return std::nullopt;
}

} // namespace aperylab

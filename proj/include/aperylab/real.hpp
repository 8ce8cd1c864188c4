#pragma once

#include <mpfr.h>

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "aperylab/rational.hpp"

namespace aperylab {

// Arbitrary-precision binary float carrying its decimal working precision.
// Every mpfr operation is correctly rounded (round-to-nearest), so a single
// operation at precision P is exact to well under 1 ulp.
class Real {
  public:
    static constexpr long kDefaultDigits = 50;

    Real() : Real(0L, kDefaultDigits) {}
    Real(long v, long digits);
    Real(const Int& v, long digits);
    Real(const Rat& q, long digits);
    // Parses decimal scientific notation at the given precision.
    Real(const std::string& s, long digits);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(Real o) noexcept;
    ~Real();

    long digits() const { return digits_; }
    // Same value re-rounded to a new working precision.
    Real to_digits(long digits) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;
    Real& operator+=(const Real& b);
    Real& operator-=(const Real& b);
    Real& operator*=(const Real& b);

    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    Real abs() const;

    Real sqrt() const;
    Real exp() const;
    Real log() const;   // x > 0
    Real sin() const;
    Real cos() const;
    Real atan() const;
    Real pow_si(long e) const;
    // x^(1/n) for x > 0.
    Real root(unsigned long n) const;

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    // Nearest integer; ties away from zero.
    Int round_to_int() const;
    // floor(log10 |x|) + 1-ish magnitude estimate; 0 for x == 0.
    long exponent10() const;

    // Scientific decimal string with `sd` significant digits (default: full
    // working precision plus enough digits for exact round-trip).
    std::string str(long sd = 0) const;

    struct Repr {
        std::string digits;  // sign + decimal mantissa, value = 0.digits * 10^exponent
        long exponent = 0;
        long prec = 0;       // decimal working precision
    };
    Repr repr() const;
    static Real from_repr(const Repr& r);

    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }

    static long digits_to_bits(long digits);

  private:
    explicit Real(long digits);   // uninitialized value at given precision
    static long pair_digits(const Real& a, const Real& b) {
        return a.digits_ > b.digits_ ? a.digits_ : b.digits_;
    }
    mpfr_t x_;
    long digits_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

// Number of leading decimal digits on which a and b agree, relative to their
// common magnitude. Returns a large sentinel (10^9) for exact equality.
long agreed_digits(const Real& a, const Real& b);

// Guard digits for a computation consuming n_terms series terms:
// G = 10 + ceil(10*log10(1 + n_terms)).
long guard_digits(long n_terms);

// Certification policy: evaluate fn at P+G and at P+2G decimal digits and
// require agreement to P digits; returns the P+2G value rounded to P digits.
// Throws precision_error on mismatch.
Real certified(long P, long n_terms, const std::function<Real(long)>& fn);

// Complex value; both parts share a working precision.
struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(Real(0L, re.digits())) {}
    static Complex zero(long digits) { return {Real(0L, digits), Real(0L, digits)}; }

    long digits() const { return re.digits(); }
    Complex conj() const { return {re, -im}; }
    Real norm2() const { return re * re + im * im; }  // |z|^2
    Real abs() const { return norm2().sqrt(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& b) { re += b.re; im += b.im; return *this; }
    Complex& operator-=(const Complex& b) { re -= b.re; im -= b.im; return *this; }
};

// exp(2*pi*i*t)
Complex unit_phase(const Real& t);

// Smallest-denominator rational within 10^-tol_digits (relative) of x, found
// by walking continued-fraction convergents of the exact binary value of x.
// Empty when no convergent with denominator <= max_den is that close.
std::optional<Rat> reconstruct_rational(const Real& x, const Int& max_den, long tol_digits);

} // namespace aperylab

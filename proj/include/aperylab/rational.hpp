#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "aperylab/errors.hpp"

namespace aperylab {

// Arbitrary-size integer, value semantics over mpz_t.
class Int {
  public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); }
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw input_error("Int: cannot parse \"" + s + "\"");
        }
    }
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Int& operator=(Int o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.z_, a.z_, b.z_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.z_, a.z_, b.z_); return r; }
    Int operator-() const { Int r; mpz_neg(r.z_, z_); return r; }
    Int& operator+=(const Int& b) { mpz_add(z_, z_, b.z_); return *this; }
    Int& operator*=(const Int& b) { mpz_mul(z_, z_, b.z_); return *this; }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend auto operator<=>(const Int& a, const Int& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c <=> 0;
    }
    bool operator==(long v) const { return mpz_cmp_si(z_, v) == 0; }

    // Divides b into *this exactly; caller guarantees divisibility.
    Int divexact(const Int& b) const { Int r; mpz_divexact(r.z_, z_, b.z_); return r; }
    bool divisible_by(const Int& b) const { return mpz_divisible_p(z_, b.z_) != 0; }

    int sign() const { return mpz_sgn(z_); }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }
    size_t digits10() const { return mpz_sizeinbase(z_, 10); }
    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

  private:
    mpz_t z_;
};

Int factorial(unsigned long n);
Int binomial(long n, long k);   // 0 when k < 0 or k > n; n must be >= 0
Int lcm_range(long n);          // LCM(1..n), n >= 1
Int pow_int(const Int& b, unsigned long e);

// Exact rational, always reduced with positive denominator (mpq canonical form).
class Rat {
  public:
    Rat() { mpq_init(q_); }
    Rat(long v) { mpq_init(q_); mpq_set_si(q_, v, 1); }
    Rat(long num, long den);
    Rat(const Int& num, const Int& den);
    explicit Rat(const Int& v) { mpq_init(q_); mpq_set_z(q_, v.raw()); }
    explicit Rat(const std::string& s);   // "p/q" or "p"
    Rat(const Rat& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(Rat o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.q_, a.q_, b.q_); return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.q_, a.q_, b.q_); return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.q_, a.q_, b.q_); return r; }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (mpq_sgn(b.q_) == 0) throw input_error("Rat: division by zero");
        Rat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rat operator-() const { Rat r; mpq_neg(r.q_, q_); return r; }
    Rat& operator+=(const Rat& b) { mpq_add(q_, q_, b.q_); return *this; }
    Rat& operator-=(const Rat& b) { mpq_sub(q_, q_, b.q_); return *this; }
    Rat& operator*=(const Rat& b) { mpq_mul(q_, q_, b.q_); return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend auto operator<=>(const Rat& a, const Rat& b) {
        int c = mpq_cmp(a.q_, b.q_);
        return c <=> 0;
    }
    bool operator==(long v) const { return mpq_cmp_si(q_, v, 1) == 0; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    Int num() const { Int r; mpz_set(r.raw(), mpq_numref(q_)); return r; }
    Int den() const { Int r; mpz_set(r.raw(), mpq_denref(q_)); return r; }
    Rat abs() const { Rat r; mpq_abs(r.q_, q_); return r; }
    Rat pow(long e) const;

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    mpq_srcptr raw() const { return q_; }
    mpq_ptr raw() { return q_; }

  private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& q);

// Polynomial in one variable over Q, coefficients ascending, no trailing zeros.
class PolyN {
  public:
    PolyN() = default;
    explicit PolyN(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyN constant(Rat v) { return PolyN(std::vector<Rat>{std::move(v)}); }
    // The monomial c*x^k.
    static PolyN monomial(Rat c, size_t k);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

    Rat eval(const Rat& x) const;          // exact Horner
    Rat eval(long n) const { return eval(Rat(n)); }
    // Evaluates value and first derivative at x in one Horner pass.
    std::pair<Rat, Rat> eval_dual(const Rat& x) const;
    PolyN shifted(const Rat& s) const;     // p(x + s)

    friend PolyN operator+(const PolyN& a, const PolyN& b);
    friend PolyN operator-(const PolyN& a, const PolyN& b);
    friend PolyN operator*(const PolyN& a, const PolyN& b);
    PolyN operator-() const;
    friend PolyN operator*(const Rat& s, const PolyN& p);

    friend bool operator==(const PolyN& a, const PolyN& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "n") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

Rat eval_poly(const PolyN& p, long n);

} // namespace aperylab

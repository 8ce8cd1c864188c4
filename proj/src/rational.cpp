#include "aperylab/rational.hpp"

#include <ostream>
#include <sstream>

namespace aperylab {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.raw(), n);
    return r;
}

Int binomial(long n, long k) {
    if (n < 0) throw input_error("binomial: n must be nonnegative");
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int lcm_range(long n) {
    if (n < 1) throw input_error("lcm_range: n must be >= 1");
    Int r(1);
    for (long k = 2; k <= n; ++k) mpz_lcm_ui(r.raw(), r.raw(), static_cast<unsigned long>(k));
    return r;
}

Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.raw(), b.raw(), e);
    return r;
}

Rat::Rat(long num, long den) {
    if (den == 0) throw input_error("Rat: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    Rat d;
    mpq_set_si(d.q_, den, 1);
    mpq_div(q_, q_, d.q_);
}

Rat::Rat(const Int& num, const Int& den) {
    if (den.sign() == 0) throw input_error("Rat: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rat::Rat(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
        mpq_clear(q_);
        throw input_error("Rat: cannot parse \"" + s + "\"");
    }
    mpq_canonicalize(q_);
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long ue = static_cast<unsigned long>(inv ? -e : e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), ue);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), ue);
    if (inv) {
        if (r.is_zero()) throw input_error("Rat::pow: zero to negative power");
        mpq_inv(r.q_, r.q_);
    }
    return r;
}

std::string Rat::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.str(); }

PolyN PolyN::monomial(Rat c, size_t k) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = std::move(c);
    return PolyN(std::move(v));
}

Rat PolyN::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::pair<Rat, Rat> PolyN::eval_dual(const Rat& x) const {
    Rat v(0), d(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        d = d * x + v;
        v = v * x + *it;
    }
    return {v, d};
}

PolyN PolyN::shifted(const Rat& s) const {
    // Synthetic division: repeatedly divide by (x - (-s)) collecting remainders.
    std::vector<Rat> work = c_;
    std::vector<Rat> out(c_.size(), Rat(0));
    for (size_t k = 0; k < out.size(); ++k) {
        for (size_t j = work.size(); j-- > 1;) work[j - 1] += s * work[j];
        out[k] = work.empty() ? Rat(0) : work.front();
        if (!work.empty()) work.erase(work.begin());
    }
    return PolyN(std::move(out));
}

PolyN operator+(const PolyN& a, const PolyN& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return PolyN(std::move(c));
}

PolyN operator-(const PolyN& a, const PolyN& b) { return a + (-b); }

PolyN PolyN::operator-() const {
    std::vector<Rat> c = c_;
    for (auto& v : c) v = -v;
    return PolyN(std::move(c));
}

PolyN operator*(const PolyN& a, const PolyN& b) {
    if (a.is_zero() || b.is_zero()) return PolyN();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return PolyN(std::move(c));
}

PolyN operator*(const Rat& s, const PolyN& p) {
    if (s.is_zero()) return PolyN();
    std::vector<Rat> c = p.c_;
    for (auto& v : c) v *= s;
    return PolyN(std::move(c));
}

std::string PolyN::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << (c_[k].sign() > 0 ? " + " : " - ");
        else if (c_[k].sign() < 0) os << "-";
        Rat a = c_[k].abs();
        if (k == 0 || !(a == 1)) os << a.str();
        if (k > 0) {
            if (!(a == 1)) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Rat eval_poly(const PolyN& p, long n) { return p.eval(Rat(n)); }

} // namespace aperylab

#pragma once

#include <vector>

#include "aperylab/rational.hpp"

namespace aperylab {

// Truncated power series over Q; arithmetic respects the truncation order.
// coeffs()[k] is the coefficient of q^k; entries beyond order() are absent.
class QSeries {
  public:
    QSeries() : order_(0) { c_.assign(1, Rat(0)); }
    QSeries(std::vector<Rat> coeffs, long order);
    static QSeries zero(long order) { return QSeries({}, order); }
    static QSeries one(long order) { return QSeries({Rat(1)}, order); }
    static QSeries identity(long order) { return QSeries({Rat(0), Rat(1)}, order); }

    long order() const { return order_; }
    Rat coeff(long k) const {
        return (k >= 0 && k <= order_) ? c_[static_cast<size_t>(k)] : Rat(0);
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    void set_coeff(long k, Rat v);

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rat& s, const QSeries& a);
    QSeries operator-() const;

    // a / b with b(0) != 0.
    friend QSeries operator/(const QSeries& a, const QSeries& b);

    // Composition a(g(q)) with g(0) = 0.
    QSeries compose(const QSeries& g) const;

    // exp of a series with zero constant term.
    QSeries exp0() const;

    // Compositional inverse of phi = c1 q + ... with c1 != 0:
    // returns psi with phi(psi(q)) = q to the truncation order.
    QSeries inverse_composition() const;

    // Multiplication by q (drops the top coefficient).
    QSeries shift_up() const;

    friend bool operator==(const QSeries& a, const QSeries& b);

  private:
    std::vector<Rat> c_;
    long order_;
};

} // namespace aperylab

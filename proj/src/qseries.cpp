#include "aperylab/qseries.hpp"

namespace aperylab {

QSeries::QSeries(std::vector<Rat> coeffs, long order) : c_(std::move(coeffs)), order_(order) {
    if (order < 0) throw input_error("QSeries: negative order");
    c_.resize(static_cast<size_t>(order) + 1, Rat(0));
}

void QSeries::set_coeff(long k, Rat v) {
    if (k < 0 || k > order_) throw input_error("QSeries::set_coeff: index out of range");
    c_[static_cast<size_t>(k)] = std::move(v);
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    long ord = std::min(a.order_, b.order_);
    std::vector<Rat> c(static_cast<size_t>(ord) + 1);
    for (long k = 0; k <= ord; ++k) c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return QSeries(std::move(c), ord);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries QSeries::operator-() const {
    std::vector<Rat> c = c_;
    for (auto& v : c) v = -v;
    return QSeries(std::move(c), order_);
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    long ord = std::min(a.order_, b.order_);
    std::vector<Rat> c(static_cast<size_t>(ord) + 1, Rat(0));
    for (long i = 0; i <= ord; ++i) {
        const Rat& ai = a.c_[static_cast<size_t>(i)];
        if (ai.is_zero()) continue;
        for (long j = 0; i + j <= ord; ++j) {
            if (b.c_[static_cast<size_t>(j)].is_zero()) continue;
            c[static_cast<size_t>(i + j)] += ai * b.c_[static_cast<size_t>(j)];
        }
    }
    return QSeries(std::move(c), ord);
}

QSeries operator*(const Rat& s, const QSeries& a) {
    std::vector<Rat> c = a.c_;
    for (auto& v : c) v *= s;
    return QSeries(std::move(c), a.order_);
}

QSeries operator/(const QSeries& a, const QSeries& b) {
    if (b.coeff(0).is_zero()) throw input_error("QSeries: division by series with zero constant term");
    long ord = std::min(a.order_, b.order_);
    std::vector<Rat> q(static_cast<size_t>(ord) + 1, Rat(0));
    for (long n = 0; n <= ord; ++n) {
        Rat s = a.coeff(n);
        for (long k = 1; k <= n; ++k) s -= b.coeff(k) * q[static_cast<size_t>(n - k)];
        q[static_cast<size_t>(n)] = s / b.coeff(0);
    }
    return QSeries(std::move(q), ord);
}

QSeries QSeries::compose(const QSeries& g) const {
    if (!g.coeff(0).is_zero()) throw input_error("QSeries::compose: inner series must vanish at 0");
    long ord = std::min(order_, g.order_);
    QSeries out = QSeries::zero(ord);
    QSeries pw = QSeries::one(ord);
    for (long k = 0; k <= ord; ++k) {
        if (!coeff(k).is_zero()) out = out + coeff(k) * pw;
        if (k < ord) pw = pw * g;
    }
    return out;
}

QSeries QSeries::exp0() const {
    if (!coeff(0).is_zero()) throw input_error("QSeries::exp0: constant term must vanish");
    // E' = s' E termwise: n E_n = sum_{j<=n} j s_j E_{n-j}
    std::vector<Rat> E(static_cast<size_t>(order_) + 1, Rat(0));
    E[0] = Rat(1);
    for (long n = 1; n <= order_; ++n) {
        Rat acc(0);
        for (long j = 1; j <= n; ++j)
            acc += Rat(j) * coeff(j) * E[static_cast<size_t>(n - j)];
        E[static_cast<size_t>(n)] = acc / Rat(n);
    }
    return QSeries(std::move(E), order_);
}

QSeries QSeries::inverse_composition() const {
    if (!coeff(0).is_zero()) throw input_error("QSeries::inverse_composition: need phi(0) = 0");
    if (coeff(1).is_zero()) throw input_error("QSeries::inverse_composition: need phi'(0) != 0");
    const Rat c1 = coeff(1);
    std::vector<Rat> psi(static_cast<size_t>(order_) + 1, Rat(0));
    psi[1] = Rat(1) / c1;
    for (long n = 2; n <= order_; ++n) {
        // with psi_n still 0, the q^n coefficient of phi(psi) is the defect
        QSeries partial(std::vector<Rat>(psi.begin(), psi.begin() + n + 1), n);
        Rat defect = compose(partial).coeff(n);
        psi[static_cast<size_t>(n)] = -defect / c1;
    }
    return QSeries(std::move(psi), order_);
}

QSeries QSeries::shift_up() const {
    std::vector<Rat> c(static_cast<size_t>(order_) + 1, Rat(0));
    for (long k = 1; k <= order_; ++k) c[static_cast<size_t>(k)] = coeff(k - 1);
    return QSeries(std::move(c), order_);
}

bool operator==(const QSeries& a, const QSeries& b) {
    long ord = std::min(a.order_, b.order_);
    for (long k = 0; k <= ord; ++k)
        if (!(a.coeff(k) == b.coeff(k))) return false;
    return true;
}

} // namespace aperylab

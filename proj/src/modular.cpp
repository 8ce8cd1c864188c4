#include "aperylab/modular.hpp"

#include <algorithm>

#include "aperylab/frobenius.hpp"
#include "aperylab/parallel.hpp"
#include "aperylab/sequences.hpp"
#include "aperylab/special.hpp"

namespace aperylab {

Int sigma_k(long n, long k) {
    if (n < 1) throw input_error("sigma_k: n must be positive");
    Int s(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += pow_int(Int(d), static_cast<unsigned long>(k));
        long e = n / d;
        if (e != d) s += pow_int(Int(e), static_cast<unsigned long>(k));
    }
    return s;
}

namespace detail {

namespace {
std::vector<Int> sigma_table(long order, long k, bool parallel) {
    std::vector<Int> t(static_cast<size_t>(order) + 1, Int(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long n = 1; n <= order; ++n) t[static_cast<size_t>(n)] = sigma_k(n, k);
#else
    (void)parallel;
    for (long n = 1; n <= order; ++n) t[static_cast<size_t>(n)] = sigma_k(n, k);
#endif
    return t;
}
} // namespace

std::vector<Int> sigma_table_serial(long order, long k) { return sigma_table(order, k, false); }
std::vector<Int> sigma_table_omp(long order, long k) { return sigma_table(order, k, true); }

} // namespace detail

namespace {
std::vector<Int> sigma_table_auto(long order, long k) {
    return parallel_enabled() ? detail::sigma_table_omp(order, k)
                              : detail::sigma_table_serial(order, k);
}
} // namespace

QSeries eisenstein_E2(long i, long order) {
    if (i < 1) throw input_error("eisenstein_E2: level must be >= 1");
    QSeries s = QSeries::zero(order);
    s.set_coeff(0, Rat(-i, 24));
    std::vector<Int> sig = sigma_table_auto(order / i, 1);
    for (long n = 1; n * i <= order; ++n)
        s.set_coeff(n * i, Rat(i) * Rat(sig[static_cast<size_t>(n)]));
    return s;
}

QSeries eisenstein_E4(long i, long order) {
    if (i < 1) throw input_error("eisenstein_E4: level must be >= 1");
    QSeries s = QSeries::zero(order);
    s.set_coeff(0, Rat(i * i, 240));
    std::vector<Int> sig = sigma_table_auto(order / i, 3);
    for (long n = 1; n * i <= order; ++n)
        s.set_coeff(n * i, Rat(i * i) * Rat(sig[static_cast<size_t>(n)]));
    return s;
}

QSeries phi_form(const std::string& variety, long order) {
    if (variety == "V12")
        return Rat(5) * eisenstein_E2(1, order) - eisenstein_E2(2, order) +
               eisenstein_E2(3, order) - Rat(5) * eisenstein_E2(6, order);
    if (variety == "V16")
        return Rat(4) * eisenstein_E2(1, order) - Rat(2) * eisenstein_E2(2, order) +
               Rat(2) * eisenstein_E2(4, order) - Rat(4) * eisenstein_E2(8, order);
    if (variety == "V18")
        return Rat(3) * eisenstein_E2(1, order) - Rat(3) * eisenstein_E2(9, order);
    throw input_error("phi_form: no weight-2 table row for \"" + variety + "\"");
}

QSeries f_form(const std::string& variety, long order) {
    // "E_4" in the weight-4 table is E_{4,1}: only then c_0 = 0 and c_1 = 1.
    if (variety == "V12")
        return eisenstein_E4(1, order) - Rat(7) * eisenstein_E4(2, order) +
               Rat(7) * eisenstein_E4(3, order) - eisenstein_E4(6, order);
    if (variety == "V16")
        return eisenstein_E4(1, order) - Rat(21, 4) * eisenstein_E4(2, order) +
               Rat(21, 4) * eisenstein_E4(4, order) - eisenstein_E4(8, order);
    if (variety == "V18") {
        // Legendre symbol mod 3 times sigma_3
        QSeries s = QSeries::zero(order);
        std::vector<Int> sig = sigma_table_auto(order, 3);
        for (long n = 1; n <= order; ++n) {
            int chi = n % 3 == 1 ? 1 : (n % 3 == 2 ? -1 : 0);
            if (chi != 0) s.set_coeff(n, Rat(chi) * Rat(sig[static_cast<size_t>(n)]));
        }
        return s;
    }
    throw input_error("f_form: no weight-4 table row for \"" + variety + "\"");
}

Real L_F_3(const std::string& variety, long P) {
    // L(s) = (1 - x 2^{2-s} + x p^{2-s} - (2p)^{2-s}) zeta(s) zeta(s-3) at s=3
    // for V12 (x=7, p=3) and V16 (x=21/4, p=4); the V18 Euler product factors
    // as L(chi_3, s-3) L(chi_3, s).
    if (variety == "V12") {
        Rat factor = Rat(1) - Rat(7, 2) + Rat(7, 3) - Rat(1, 6);
        return (Real(factor * Rat(-1, 2), P + 10) * zeta_int(3, P + 10)).to_digits(P);
    }
    if (variety == "V16") {
        Rat factor = Rat(1) - Rat(21, 8) + Rat(21, 16) - Rat(1, 8);
        return (Real(factor * Rat(-1, 2), P + 10) * zeta_int(3, P + 10)).to_digits(P);
    }
    if (variety == "V18") return (Real(Rat(1, 3), P + 10) * chi3_L(3, P + 10)).to_digits(P);
    throw input_error("L_F_3: no closed form for \"" + variety + "\"");
}

nlohmann::json IdentityReport::to_json() const {
    nlohmann::json j{{"variety", variety},
                     {"identity", identity},
                     {"order_checked", order_checked},
                     {"status", ok ? "ok" : "mismatch"}};
    if (first_mismatch)
        j["first_mismatch"] = {{"power", first_mismatch->power},
                               {"lhs", first_mismatch->lhs},
                               {"rhs", first_mismatch->rhs}};
    else
        j["first_mismatch"] = nullptr;
    return j;
}

namespace {

IdentityReport compare_series(const std::string& variety, const std::string& identity,
                              const QSeries& lhs, const QSeries& rhs, long order) {
    IdentityReport rep;
    rep.variety = variety;
    rep.identity = identity;
    rep.order_checked = order;
    rep.ok = true;
    for (long k = 0; k <= order; ++k) {
        if (!(lhs.coeff(k) == rhs.coeff(k))) {
            rep.ok = false;
            rep.first_mismatch =
                IdentityReport::Mismatch{k, lhs.coeff(k).str(), rhs.coeff(k).str()};
            break;
        }
    }
    return rep;
}

} // namespace

IdentityReport verify_phi_identity(const std::string& variety, long order) {
    long m_ord = std::max(order, 1L);  // the mirror map needs the linear term
    MirrorMap mm = mirror_map(mukai_operator(variety), m_ord);
    SeqPair pair = apery_pair(variety, m_ord);
    QSeries A(pair.a, m_ord);
    QSeries lhs = A.compose(mm.t_of_q);
    QSeries rhs = phi_form(variety, m_ord);
    return compare_series(variety, "phi", lhs, rhs, order);
}

IdentityReport verify_ratio_identity(const std::string& variety, long order) {
    long m_ord = std::max(order, 1L);
    MirrorMap mm = mirror_map(mukai_operator(variety), m_ord);
    SeqPair pair = apery_pair(variety, m_ord);
    QSeries A(pair.a, m_ord), B(pair.b, m_ord);
    QSeries lhs = B.compose(mm.t_of_q) / A.compose(mm.t_of_q);
    QSeries f = f_form(variety, m_ord);
    QSeries rhs = QSeries::zero(m_ord);
    for (long i = 1; i <= m_ord; ++i) rhs.set_coeff(i, f.coeff(i) / Rat(i).pow(3));
    return compare_series(variety, "ratio", lhs, rhs, order);
}

} // namespace aperylab

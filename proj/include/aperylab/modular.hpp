#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "aperylab/qseries.hpp"
#include "aperylab/real.hpp"

namespace aperylab {

// Divisor power sum sigma_k(n) = sum_{d | n} d^k.
Int sigma_k(long n, long k);

// Rescaled level-i Eisenstein series:
//   E_{2,i}(Q) = -(1/24) i (1 - 24 sum sigma(n) Q^{in})
//   E_{4,i}(Q) =  (1/240) i^2 (1 + 240 sum sigma_3(n) Q^{in})
QSeries eisenstein_E2(long i, long order);
QSeries eisenstein_E4(long i, long order);

// The weight-2 combination Phi and weight-4 combination F for the rational
// Mukai cases V12, V16, V18.
QSeries phi_form(const std::string& variety, long order);
QSeries f_form(const std::string& variety, long order);

// Closed-form L(F, 3) from the tabulated L-factor at s = 3 together with the
// continued values zeta(0) = -1/2 and L(chi_3, 0) = 1/3.
Real L_F_3(const std::string& variety, long P);

struct IdentityReport {
    std::string variety;
    std::string identity;      // "phi" or "ratio"
    long order_checked = 0;
    bool ok = false;
    struct Mismatch {
        long power;
        std::string lhs, rhs;
    };
    std::optional<Mismatch> first_mismatch;

    nlohmann::json to_json() const;
};

// Coefficientwise check of  sum a_n t^n = Phi(q(t))  through q^order.
IdentityReport verify_phi_identity(const std::string& variety, long order);

// Coefficientwise check of  (B/A)(t(q)) = sum c_i q^i / i^3  through q^order,
// with c_i the coefficients of F.
IdentityReport verify_ratio_identity(const std::string& variety, long order);

namespace detail {
std::vector<Int> sigma_table_serial(long order, long k);
std::vector<Int> sigma_table_omp(long order, long k);
} // namespace detail

} // namespace aperylab

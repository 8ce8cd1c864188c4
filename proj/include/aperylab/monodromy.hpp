#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "aperylab/real.hpp"

namespace aperylab {

// Monodromy frame of the regularized Kummer pullback: exponent list, Taylor
// coefficients of H(y) = (1-y^N)/prod(1 - y exp(2 pi i alpha_j)), and the
// Gram matrix (v_i,v_i) = 2, (v_i,v_j) = c_|i-j|.
struct HypFrame {
    long N = 0;
    std::vector<Real> alphas;
    std::vector<Real> c;                  // c_0 = 1 through c_{N}
    std::vector<std::vector<Real>> G;     // N x N symmetric
    Real e, u;                            // the defining perturbations when known
    long digits = 0;
};

// Taylor coefficients c_0..c_order of H(y). The exponent multiset must be
// symmetric under alpha <-> 1-alpha so the c_i are real; imaginary residues
// beyond tolerance raise input_error.
std::vector<Real> h_expansion(const std::vector<Real>& alphas, long N, long order, long P);

// Builds the frame (c and G) from an exponent list.
HypFrame gram_matrix(const std::vector<Real>& alphas, long N, long P);

// Frame with alphas {1/2-e, 1/2+e, 1/2-u, 1/2+u, ...}. With perturb_tail the
// remaining exponents are split into pairs 1/2 -+ w_m (w_m distinct small
// fractions of min(|e|,|u|)), keeping the local monodromy at infinity
// semisimple; an odd leftover stays at exactly 1/2.
HypFrame standard_frame(long N, const Real& e, const Real& u, long P, bool perturb_tail = true);

// Reflection with respect to v_j (1-based): x -> x - (x, v_j) v_j.
// An involution since (v_j, v_j) = 2.
std::vector<std::vector<Real>> reflection(const HypFrame& frame, long j);

struct EigenReport {
    long N = 0;
    std::vector<long> ordering;        // 1-based reflection order realizing M_inf
    std::vector<Real> residuals;       // per eigenvector
    std::vector<Complex> lambdas;
    bool ok = false;

    nlohmann::json to_json(const Real& e, const Real& u) const;
};

// Searches cyclic/reversed orderings of the N reflections for the product
// whose eigenvectors are the Vandermonde vectors e_i = sum_j z_i^j v^_j
// (dual basis via G^{-1}); reports residuals ||M e - lambda e||/||e||.
EigenReport infinity_monodromy_eigencheck(const HypFrame& frame, long P);

// Second-wedge data: basis V_ij = v_i ^ v_j (i < j) and the wedge Gram
// matrix <V_ij, V_kl> = G_ik G_jl - G_il G_jk of the symmetrized form.
struct WedgeFrame {
    long N = 0;
    std::vector<std::pair<long, long>> basis;     // 0-based index pairs, i < j
    std::vector<std::vector<Real>> form;
};

WedgeFrame wedge_frame(const HypFrame& frame);

// The semiorthogonal form [v_i, v_j): G_ij above the diagonal (basis order),
// 1 on it, 0 below.
std::vector<std::vector<Real>> semiorthogonal_form(const HypFrame& frame);

struct WedgeReport {
    long N = 0;
    Real kappa_ratio;        // kappa_12 / kappa_34
    Real target;             // sin(2 pi e) / sin(2 pi u)
    Real ratio_residual;
    Real vanish_residual;    // |sin(2 pi u) kappa_12 - sin(2 pi e) kappa_34|
    bool ok = false;

    nlohmann::json to_json(const Real& e, const Real& u) const;
};

// The V^_12 components of E_12 = e_1 ^ e_2 and E_34 = e_3 ^ e_4: their ratio
// must equal sin(2 pi e)/sin(2 pi u) and the matching component of
// sin(2 pi u) E_12 - sin(2 pi e) E_34 must vanish.
WedgeReport wedge_coefficient_identity(const HypFrame& frame, const Real& e, const Real& u, long P);

} // namespace aperylab

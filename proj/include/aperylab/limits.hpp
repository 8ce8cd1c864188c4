#pragma once

#include "aperylab/real.hpp"
#include "aperylab/sequences.hpp"

namespace aperylab {

enum class LimitMethod { plain_ratio, aitken };

struct ApproxLimit {
    Real value;
    Real error_estimate;
    long n_used = 0;
    LimitMethod method = LimitMethod::plain_ratio;
};

// Estimates lim b_n/a_n with the geometric error model
//   r_n - C ~ K rho^n,  rho estimated from three consecutive differences,
//   error = |d_n| * rho/(1-rho) with a 4x safety factor.
// Differences are taken exactly in rational arithmetic (no cancellation
// floor); the returned value is the chosen ratio rounded to P digits.
// Throws nonconvergence_error when difference ratios stay >= 1, and
// precision_error when the model cannot certify 10^-P from the given terms.
ApproxLimit apery_limit(const SeqPair& pair, long P, LimitMethod method = LimitMethod::plain_ratio);

// Same estimator over an already-evaluated ratio sequence (deresonation
// pipelines produce these). `start` skips leading entries.
ApproxLimit estimate_limit(const std::vector<Real>& ratios, long P,
                           LimitMethod method = LimitMethod::plain_ratio, long start = 1,
                           bool require_target = true);

} // namespace aperylab

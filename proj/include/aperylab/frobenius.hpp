#pragma once

#include "aperylab/diff_op.hpp"
#include "aperylab/qseries.hpp"

namespace aperylab {

// Frobenius solution pair at a maximal-unipotent point t = 0:
// y_0 = A(t) with A_0 = 1, and y_1 = A(t) log t + A_tilde(t) with A_tilde_0 = 0.
struct FrobeniusPair {
    std::vector<Rat> A;
    std::vector<Rat> A_tilde;
};

// Exact Frobenius coefficients through t^order. Requires op.is_mum().
FrobeniusPair frobenius_mum(const DiffOp& op, long order);

// Mirror map q(t) = t exp(A_tilde/A) and its exact compositional inverse.
struct MirrorMap {
    QSeries q_of_t;   // series in t
    QSeries t_of_q;   // series in q
};

MirrorMap mirror_map(const DiffOp& op, long order);

// Applies op to the symbolic pair u(t) log t + v(t); returns the two
// coefficient streams of the result. Exact; used to verify annihilation.
std::pair<std::vector<Rat>, std::vector<Rat>> apply_op_log_pair(const DiffOp& op,
                                                                const std::vector<Rat>& u,
                                                                const std::vector<Rat>& v,
                                                                long order);

} // namespace aperylab

#include "aperylab/frobenius.hpp"

#include "aperylab/recurrence.hpp"

namespace aperylab {

namespace {

// value + alpha * deriv, arithmetic mod alpha^2
struct Dual {
    Rat v, d;
};

Dual div(const Dual& a, const Dual& b) {
    if (b.v.is_zero()) throw input_error("frobenius: indicial value vanished");
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

} // namespace

FrobeniusPair frobenius_mum(const DiffOp& op, long order) {
    if (!op.is_mum()) throw input_error("frobenius_mum: operator is not MUM at t = 0");
    Recurrence rec = op_to_recurrence(op);
    const auto& shifts = rec.shifts();

    // c_m(alpha) with c_0 = 1 solves sum_i P_i(alpha + m) c_{m-i} = 0;
    // A_m = c_m(0) and A_tilde_m = c_m'(0) give y_0 and y_1 = y_0 log t + A_tilde.
    std::vector<Dual> c;
    c.push_back({Rat(1), Rat(0)});
    for (long m = 1; m <= order; ++m) {
        Dual acc{Rat(0), Rat(0)};
        for (size_t k = 1; k < shifts.size(); ++k) {
            long idx = m - shifts[k].i;
            if (idx < 0) continue;
            auto [pv, pd] = shifts[k].poly.eval_dual(Rat(m));
            acc.v += pv * c[static_cast<size_t>(idx)].v;
            acc.d += pv * c[static_cast<size_t>(idx)].d + pd * c[static_cast<size_t>(idx)].v;
        }
        auto [qv, qd] = shifts[0].poly.eval_dual(Rat(m));
        Dual cm = div({-acc.v, -acc.d}, {qv, qd});
        c.push_back(cm);
    }
    FrobeniusPair out;
    for (const Dual& x : c) {
        out.A.push_back(x.v);
        out.A_tilde.push_back(x.d);
    }
    return out;
}

MirrorMap mirror_map(const DiffOp& op, long order) {
    FrobeniusPair f = frobenius_mum(op, order);
    QSeries A(f.A, order), At(f.A_tilde, order);
    QSeries q_of_t = (At / A).exp0().shift_up();   // t * exp(A_tilde / A)
    QSeries t_of_q = q_of_t.inverse_composition();
    if (!(q_of_t.compose(t_of_q) == QSeries::identity(order)))
        throw precision_error("mirror_map: compositional inverse failed round-trip");
    return {q_of_t, t_of_q};
}

std::pair<std::vector<Rat>, std::vector<Rat>> apply_op_log_pair(const DiffOp& op,
                                                                const std::vector<Rat>& u,
                                                                const std::vector<Rat>& v,
                                                                long order) {
    auto D_pair = [order](std::vector<Rat>& uu, std::vector<Rat>& vv) {
        // D(u log t + v) = (Du) log t + (u + Dv)
        std::vector<Rat> du(uu.size()), dv(vv.size());
        for (long n = 0; n <= order; ++n) {
            du[static_cast<size_t>(n)] = Rat(n) * uu[static_cast<size_t>(n)];
            dv[static_cast<size_t>(n)] = uu[static_cast<size_t>(n)] + Rat(n) * vv[static_cast<size_t>(n)];
        }
        uu = std::move(du);
        vv = std::move(dv);
    };
    std::vector<Rat> U(static_cast<size_t>(order) + 1, Rat(0));
    std::vector<Rat> V(static_cast<size_t>(order) + 1, Rat(0));
    std::vector<Rat> u0 = u, v0 = v;
    u0.resize(static_cast<size_t>(order) + 1, Rat(0));
    v0.resize(static_cast<size_t>(order) + 1, Rat(0));
    for (const auto& [i, p] : op.terms()) {
        std::vector<Rat> pu(static_cast<size_t>(order) + 1, Rat(0));
        std::vector<Rat> pv(static_cast<size_t>(order) + 1, Rat(0));
        std::vector<Rat> du = u0, dv = v0;  // D^j applied incrementally
        for (long j = 0; j <= p.degree(); ++j) {
            Rat cj = p.coeff(static_cast<size_t>(j));
            if (!cj.is_zero()) {
                for (long n = 0; n <= order; ++n) {
                    pu[static_cast<size_t>(n)] += cj * du[static_cast<size_t>(n)];
                    pv[static_cast<size_t>(n)] += cj * dv[static_cast<size_t>(n)];
                }
            }
            if (j < p.degree()) D_pair(du, dv);
        }
        // t^i shift
        for (long n = order; n >= 0; --n) {
            if (n - i >= 0) {
                U[static_cast<size_t>(n)] += pu[static_cast<size_t>(n - i)];
                V[static_cast<size_t>(n)] += pv[static_cast<size_t>(n - i)];
            }
        }
    }
    return {U, V};
}

} // namespace aperylab

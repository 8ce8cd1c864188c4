#include "aperylab/diff_op.hpp"

#include <sstream>

namespace aperylab {

void DiffOp::add_term(long t_power, const PolyN& d_poly) {
    if (t_power < 0) throw input_error("DiffOp: negative t powers not supported");
    if (d_poly.is_zero()) return;
    auto it = terms_.find(t_power);
    if (it == terms_.end()) terms_.emplace(t_power, d_poly);
    else {
        it->second = it->second + d_poly;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

long DiffOp::order() const {
    long o = 0;
    for (const auto& [i, p] : terms_) o = std::max(o, p.degree());
    return o;
}

Rat DiffOp::coeff(long i, long j) const {
    auto it = terms_.find(i);
    if (it == terms_.end() || j < 0) return Rat(0);
    return it->second.coeff(static_cast<size_t>(j));
}

bool DiffOp::is_mum() const {
    auto it = terms_.find(0);
    if (it == terms_.end()) return false;
    long k = order();
    if (k < 1 || it->second.degree() != k) return false;
    return it->second == PolyN::monomial(Rat(1), static_cast<size_t>(k));
}

std::string DiffOp::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, p] : terms_) {
        if (!first) os << " + ";
        if (i > 0) os << "t^" << i << "*(" << p.str("D") << ")";
        else os << "(" << p.str("D") << ")";
        first = false;
    }
    return os.str();
}

namespace {

PolyN D_linear(long a, long b) {  // a + b*D
    return PolyN(std::vector<Rat>{Rat(a), Rat(b)});
}

PolyN D_quad(long c0, long c1, long c2) {  // c0 + c1*D + c2*D^2
    return PolyN(std::vector<Rat>{Rat(c0), Rat(c1), Rat(c2)});
}

} // namespace

DiffOp mukai_operator(const std::string& variety) {
    const PolyN D3 = PolyN::monomial(Rat(1), 3);
    const PolyN one_2D = D_linear(1, 2);      // 1 + 2D
    const PolyN D_plus_1 = D_linear(1, 1);
    DiffOp op;
    op.add_term(0, D3);
    if (variety == "V10") {
        // D^3 - 2t(1+2D)(11D^2+11D+3) - 4t^2 (D+1)(2D+3)(1+2D)
        op.add_term(1, Rat(-2) * (one_2D * D_quad(3, 11, 11)));
        op.add_term(2, Rat(-4) * (D_plus_1 * D_linear(3, 2) * one_2D));
    } else if (variety == "V12") {
        // D^3 - t(1+2D)(17D^2+17D+5) + t^2 (D+1)^3
        op.add_term(1, Rat(-1) * (one_2D * D_quad(5, 17, 17)));
        op.add_term(2, D_plus_1 * D_plus_1 * D_plus_1);
    } else if (variety == "V14") {
        // D^3 - t(1+2D)(13D^2+13D+4) - 3t^2 (D+1)(3D+4)(3D+2)
        op.add_term(1, Rat(-1) * (one_2D * D_quad(4, 13, 13)));
        op.add_term(2, Rat(-3) * (D_plus_1 * D_linear(4, 3) * D_linear(2, 3)));
    } else if (variety == "V16") {
        // D^3 - 4t(1+2D)(3D^2+3D+1) + 16t^2 (D+1)^3
        op.add_term(1, Rat(-4) * (one_2D * D_quad(1, 3, 3)));
        op.add_term(2, Rat(16) * (D_plus_1 * D_plus_1 * D_plus_1));
    } else if (variety == "V18") {
        // D^3 - 3t(1+2D)(3D^2+3D+1) - 27t^2 (D+1)^3
        op.add_term(1, Rat(-3) * (one_2D * D_quad(1, 3, 3)));
        op.add_term(2, Rat(-27) * (D_plus_1 * D_plus_1 * D_plus_1));
    } else {
        throw input_error("mukai_operator: unknown variety \"" + variety + "\"");
    }
    return op;
}

const std::vector<std::string>& mukai_varieties() {
    static const std::vector<std::string> v = {"V10", "V12", "V14", "V16", "V18"};
    return v;
}

} // namespace aperylab

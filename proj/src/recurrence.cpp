#include "aperylab/recurrence.hpp"

#include <algorithm>

namespace aperylab {

Recurrence::Recurrence(std::vector<Shift> shifts, long valid_from, long horizon)
    : shifts_(std::move(shifts)) {
    std::sort(shifts_.begin(), shifts_.end(), [](const Shift& a, const Shift& b) { return a.i < b.i; });
    if (shifts_.empty() || shifts_.front().i != 0 || shifts_.front().poly.is_zero())
        throw input_error("Recurrence: leading shift P_0 must be present and nonzero");
    for (const auto& s : shifts_)
        if (s.i < 0) throw input_error("Recurrence: negative shift");

    const PolyN& p0 = shifts_.front().poly;
    long last_zero = -1;
    for (long n = std::max(0L, valid_from); n <= horizon; ++n)
        if (p0.eval(n).is_zero()) last_zero = n;
    if (valid_from < 0) {
        valid_from_ = last_zero + 1;
    } else {
        if (last_zero >= valid_from)
            throw input_error("Recurrence: P_0 vanishes at n = " + std::to_string(last_zero) +
                              " >= valid_from");
        valid_from_ = valid_from;
    }
}

long Recurrence::order() const { return shifts_.back().i; }

Recurrence Recurrence::with_valid_from(long v) const {
    Recurrence r = *this;
    if (v < valid_from_)
        throw input_error("Recurrence: cannot lower valid_from below " + std::to_string(valid_from_));
    r.valid_from_ = v;
    return r;
}

nlohmann::json Recurrence::to_json() const {
    nlohmann::json shifts = nlohmann::json::array();
    for (const auto& s : shifts_) {
        nlohmann::json poly = nlohmann::json::array();
        for (const auto& c : s.poly.coeffs()) poly.push_back(c.str());
        shifts.push_back({{"i", s.i}, {"poly", poly}});
    }
    return {{"shifts", shifts}, {"valid_from", valid_from_}};
}

Recurrence Recurrence::from_json(const nlohmann::json& j) {
    if (!j.contains("shifts") || !j["shifts"].is_array())
        throw input_error("Recurrence: JSON missing \"shifts\" array");
    std::vector<Shift> shifts;
    for (const auto& js : j["shifts"]) {
        Shift s;
        s.i = js.at("i").get<long>();
        std::vector<Rat> coeffs;
        for (const auto& c : js.at("poly")) coeffs.emplace_back(c.get<std::string>());
        s.poly = PolyN(std::move(coeffs));
        shifts.push_back(std::move(s));
    }
    long vf = j.value("valid_from", -1L);
    return Recurrence(std::move(shifts), vf);
}

Recurrence op_to_recurrence(const DiffOp& op) {
    // t^i p_i(D) applied to sum u(m) t^m contributes p_i(n-i) u(n-i) at t^n.
    std::vector<Recurrence::Shift> shifts;
    for (const auto& [i, p] : op.terms())
        shifts.push_back({i, p.shifted(Rat(-i))});
    return Recurrence(std::move(shifts));
}

Recurrence regularize_recurrence(const Recurrence& rec) {
    std::vector<Recurrence::Shift> shifts;
    for (const auto& s : rec.shifts()) {
        PolyN falling = PolyN::constant(Rat(1));  // n(n-1)...(n-i+1)
        for (long m = 0; m < s.i; ++m)
            falling = falling * PolyN(std::vector<Rat>{Rat(-m), Rat(1)});
        shifts.push_back({s.i, s.poly * falling});
    }
    return Recurrence(std::move(shifts), rec.valid_from());
}

std::vector<Rat> solve(const Recurrence& rec, const std::vector<Rat>& initial, long n_max) {
    if (static_cast<long>(initial.size()) < rec.valid_from())
        throw input_error("solve: need at least valid_from initial values");
    std::vector<Rat> u = initial;
    u.reserve(static_cast<size_t>(n_max) + 1);
    const auto& shifts = rec.shifts();
    for (long n = static_cast<long>(initial.size()); n <= n_max; ++n) {
        Rat lead = shifts.front().poly.eval(n);
        if (lead.is_zero())
            throw input_error("solve: leading polynomial vanishes at n = " + std::to_string(n));
        Rat s(0);
        for (size_t k = 1; k < shifts.size(); ++k) {
            long m = n - shifts[k].i;
            if (m < 0) continue;  // power-series convention u(m) = 0 for m < 0
            s += shifts[k].poly.eval(n) * u[static_cast<size_t>(m)];
        }
        u.push_back(-s / lead);
    }
    u.resize(static_cast<size_t>(n_max) + 1);
    return u;
}

} // namespace aperylab

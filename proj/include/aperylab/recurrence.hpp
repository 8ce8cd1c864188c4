#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "aperylab/diff_op.hpp"
#include "aperylab/rational.hpp"

namespace aperylab {

// Linear recurrence sum_i P_i(n) u(n-i) = 0 with polynomial coefficients,
// asserted for n >= valid_from. Solutions are power-series coefficient
// streams, so u(m) = 0 for m < 0.
class Recurrence {
  public:
    struct Shift {
        long i;
        PolyN poly;
    };

    // valid_from < 0 requests the smallest n such that P_0 has no integer
    // zero at any m >= n (scanned up to `horizon`).
    explicit Recurrence(std::vector<Shift> shifts, long valid_from = -1, long horizon = 4096);

    const std::vector<Shift>& shifts() const { return shifts_; }
    const PolyN& leading() const { return shifts_.front().poly; }
    long order() const;
    long valid_from() const { return valid_from_; }
    Recurrence with_valid_from(long v) const;

    nlohmann::json to_json() const;
    static Recurrence from_json(const nlohmann::json& j);

  private:
    std::vector<Shift> shifts_;   // sorted by i, first entry i = 0
    long valid_from_ = 0;
};

// Step 6: the recurrence of the power-series coefficients of solutions of op,
// with shift-i polynomial P_i(n) = p_i(n - i) for the t^i part p_i(D).
Recurrence op_to_recurrence(const DiffOp& op);

// Step 7: the recurrence solved by n! u(n); shift-i polynomial picks up the
// falling factorial n(n-1)...(n-i+1).
Recurrence regularize_recurrence(const Recurrence& rec);

// Exact forward solution; output[n] = initial[n] for n < initial.size().
// Throws if a leading-polynomial zero is hit (message reports n).
std::vector<Rat> solve(const Recurrence& rec, const std::vector<Rat>& initial, long n_max);

} // namespace aperylab

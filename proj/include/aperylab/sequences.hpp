#pragma once

#include <string>
#include <vector>

#include "aperylab/recurrence.hpp"

namespace aperylab {

struct SeqNormalization {
    Rat a0 = Rat(1);
    long b_first_index = 1;
    Rat b_first_value = Rat(1);
};

// A pair of normalized recurrence solutions: a_0 = 1 (integral for the Mukai
// varieties) and b with b_0 = 0.
struct SeqPair {
    std::vector<Rat> a;
    std::vector<Rat> b;
    std::string variety;
    SeqNormalization normalization;
};

// Solves the quantum recurrence of a Mukai variety for the pair (a, b) with
// a_0 = 1 and b_0 = 0, b_1 = 1. The b-relation only holds from n = 2 (the
// n = 1 relation would force b_1 = a_1 b_0), so b is solved with valid_from 2.
// Integrality of a is asserted.
SeqPair apery_pair(const std::string& variety, long n_max);

// Which inner power the b_n binomial double sum uses; `cubic` is the reading
// equivalent to the recurrence solution, selected by test.
enum class InnerExponent { cubic, square };

// The closed binomial sums
//   a_n = sum_k C(n,k)^2 C(n+k,k)^2
//   b_n = 1/6 sum_k C(n,k)^2 C(n+k,k)^2 ( sum_{m<=n} 1/m^3
//          + sum_{m<=k} (-1)^{m-1} / (2 m^3 C(n,m) C(n+m,m)) )
// computed exactly and independently of any recurrence.
SeqPair apery_binomial_oracle(long n_max, InnerExponent inner = InnerExponent::cubic);

// True iff denominator(b_n) divides 12 * LCM(1..n)^3.
bool denominator_bound_check(const SeqPair& pair, long n);

namespace detail {
// Serial reference and OpenMP kernel; exact outputs, must agree exactly.
SeqPair binomial_oracle_serial(long n_max, InnerExponent inner);
SeqPair binomial_oracle_omp(long n_max, InnerExponent inner);
} // namespace detail

} // namespace aperylab

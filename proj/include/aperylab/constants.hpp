#pragma once

#include "aperylab/real.hpp"

namespace aperylab {

// Exact Bernoulli number B_k with the B_1 = -1/2 convention.
// Values are cached (thread-safe) since Euler-Maclaurin tails reuse them.
Rat bernoulli(unsigned long k);

// pi to P decimal digits.
Real pi_real(long P);

// Euler-Mascheroni constant to P decimal digits.
Real euler_gamma(long P);

// log(2) to P decimal digits.
Real log2_real(long P);

} // namespace aperylab

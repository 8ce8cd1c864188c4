#pragma once

#include <map>
#include <string>
#include <vector>

#include "aperylab/rational.hpp"

namespace aperylab {

// Differential operator sum_{i,j} b_ij t^i D^j with D = t d/dt, stored as a
// polynomial in D for each power of t.
class DiffOp {
  public:
    DiffOp() = default;

    void add_term(long t_power, const PolyN& d_poly);
    const std::map<long, PolyN>& terms() const { return terms_; }

    // Max power of D across all terms.
    long order() const;
    Rat coeff(long i, long j) const;

    // True when the t^0 part is exactly D^order (maximal unipotent point at t=0).
    bool is_mum() const;

    std::string str() const;

  private:
    std::map<long, PolyN> terms_;
};

// The quantum differential operators of the rank-one Fano threefolds
// V10, V12, V14, V16, V18.
DiffOp mukai_operator(const std::string& variety);

const std::vector<std::string>& mukai_varieties();

} // namespace aperylab

#pragma once

#include <vector>

#include "schreier/rational.hpp"

namespace schreier {

// max c.x  s.t.  A x <= b, x >= 0, with b >= 0 so the slack basis is
// feasible. Exact rational dense tableau, Bland's rule for anti-cycling.
struct LpResult {
  Rational value;
  std::vector<Rational> x;
  // Row indices whose slack is zero at the optimum (tight constraints).
  std::vector<int> tight_rows;
};

LpResult solve_lp_max(const std::vector<Rational>& c,
                      const std::vector<std::vector<Rational>>& A,
                      const std::vector<Rational>& b);

// Solves a square rational linear system; returns false if singular.
bool solve_linear_system(std::vector<std::vector<Rational>> M,
                         std::vector<Rational> rhs, std::vector<Rational>& out);

}  // namespace schreier

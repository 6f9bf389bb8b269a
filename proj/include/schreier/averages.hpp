#pragma once

#include <vector>

#include "schreier/families.hpp"
#include "schreier/index_stream.hpp"
#include "schreier/norms.hpp"
#include "schreier/rational_vector.hpp"

namespace schreier {

// Repeated averages: probability vectors supported on the successive maximal
// S_xi blocks of a stream.
//   level 0:        the indicator of M(n);
//   successor z+1:  average of min(M_n) many level-z averages on the
//                   residual stream M_n;
//   limit:          the first average one level up the fundamental sequence
//                   at min(M_n).
// Exact rational arithmetic throughout; coefficients are positive and sum
// to 1, and the support is the n-th maximal partition block.
RationalVector repeated_average(const Ordinal& xi, const IndexStream& M, long long n);

// Coefficients at indices <= bound of the full sum  sum_n S^xi_{M,n},
// skipping every subtree whose support starts past the bound. Linear in the
// bound rather than in the (possibly astronomical) block sizes.
RationalVector summed_averages_truncated(const Ordinal& xi, const IndexStream& M,
                                         long long bound);

// Max over nonempty F in S_xi inside [1, horizon] of the F-mass of the
// summed averages; the uniform contract is <= 6 and the value is exact.
struct WeakSummingReport {
  Rational max_value;
  FiniteSet witness;
};
WeakSummingReport verify_weak_summing(const Ordinal& xi, const IndexStream& M,
                                      long long horizon);

// Threshold n = n(beta, xi, eps) following the tail estimate: past it the
// first level-xi average on any stream with min >= n has beta-norm <= eps.
// The returned value is validated by direct norm evaluation on sample tails.
long long tail_threshold(const Ordinal& beta, const Ordinal& xi, const Rational& eps);

struct SmallBetaVector {
  FiniteSet support;        // a maximal member of S_xi
  RationalVector x;         // probability vector on that support
  Rational beta_norm;       // verified exactly < eps
  long long tail_min;       // where the tail was taken
};

// Probability vector on a maximal S_xi set inside M with ||x||_beta < eps,
// taken as the first average on the least tail of M that verifies exactly.
SmallBetaVector small_beta_vector(const Ordinal& beta, const Ordinal& xi,
                                  const Rational& eps, const IndexStream& M);

struct IsometricSelection {
  FiniteSet m_prefix;                    // union of the chosen supports
  std::vector<RationalVector> vectors;   // the averages, in order
  bool thresholds_saturated = false;     // admissibility ran on exact checks
};

// Selects tails of L so that the successive level-xi averages behave like
// the canonical c_0 basis: every nonempty partial sum has norm exactly 1.
// Tails advance to the least admissible start (deterministic), where
// admissibility is the exact unit-norm acceptance test itself; the
// seminorm-decay thresholds from the underlying argument demand blocks that
// outgrow any materializable size after two steps, so they only appear in
// tests, not as the selection rule.
IsometricSelection isometric_c0_select(const Ordinal& xi, const IndexStream& L,
                                       long long count);

}  // namespace schreier

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schreier/averages.hpp"
#include "schreier/norms.hpp"

namespace schreier {

// Paired finite-horizon block sequences (x_i) in the xi-norm and functionals
// (x_i*), built from level-iota averages: x_i is the i-th average along the
// selected stream and x_i* the indicator functional of its support. rho is
// the left complement, iota + rho = xi.
struct SchreierPair {
  Ordinal xi;
  Ordinal iota;
  Ordinal rho;
  FiniteSet J;                         // index values: min supp(x_i) per i
  std::vector<RationalVector> X;
  std::vector<RationalVector> Xstar;
  long long horizon = 0;

  // Construction metadata.
  long long tail_start = 1;            // where the tail certificate begins
  std::vector<long long> block_indices;  // which partition blocks were taken
  bool thinned = false;                // seminorm-decay selection completed
  bool union_certified = false;        // S_rho unions verified at horizon
};

struct PairCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct PairCertificate {
  std::vector<PairCheck> checks;
  Rational theta;                       // min_i x_i*(x_i)
  Rational ell1_constant;               // worst lower spreading constant
  Rational c0_constant;                 // worst upper spreading constant
  std::vector<Rational> partial_sum_upper;  // one per n <= horizon
  std::vector<Rational> partial_sum_lower;
  bool all_pass() const {
    for (const PairCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Builds the pair at the given levels along tails of L:
//  1. a tail of L on which S_iota sets are certified inside S_xi,
//  2. a block selection under which unions over S_rho index sets stay in
//     S_xi (certified at the horizon; failure is surfaced, not repaired),
//  3. a seminorm-decay thinning pass (eta = 1/2) attempted within the
//     support cap; if the thresholds outgrow materializable blocks the
//     unthinned selection is kept and `thinned` stays false.
SchreierPair build_pair(const Ordinal& xi, const Ordinal& iota, const IndexStream& L,
                        long long count);

// Exact finite-horizon verification: biorthogonality, modulus alignment,
// theta >= expected, spreading-model equalities over S_rho index sets,
// domination constants against the rho-level basis, and partial-sum
// operator-norm brackets (upper bound <= norm of the plain vector sum).
PairCertificate verify_pair(const SchreierPair& p, const Rational& theta_expected = 1);

// Norm bracket of sum_{i<=n} x_i (x) x_i* / theta_i on the finite section;
// returns the exact upper bound and checks idempotence on span(x_1..x_n).
struct ProjectionReport {
  Rational upper;
  Rational lower;
  bool idempotent = true;
};
ProjectionReport pair_projection_norm(const SchreierPair& p, long long n);

// Norm table ||x_i||_beta for gamma in I(xi) and probe levels beta < gamma;
// reports the largest gamma whose probes decay below the threshold. A
// finite-horizon heuristic, clearly labeled as such in the CLI output.
struct BetaProfile {
  struct Row {
    Ordinal gamma;
    Ordinal beta;
    std::vector<Rational> norms;
    bool decays;
  };
  std::vector<Row> rows;
  Ordinal iota_estimate;
  Rational threshold;
};
BetaProfile beta_profile(const std::vector<RationalVector>& X, const Ordinal& xi,
                         const Rational& threshold = rational(1, 2));

// Convex blocks of X and matching sums of Xstar along level-sigma averages
// of the index space, where sigma + delta = rho; the result is a pair at
// level delta over the same space. DomainError if delta is not in R(rho).
SchreierPair convex_block_descend(const SchreierPair& p, const Ordinal& delta,
                                  long long count);

}  // namespace schreier

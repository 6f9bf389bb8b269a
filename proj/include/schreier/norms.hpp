#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schreier/families.hpp"
#include "schreier/rational_vector.hpp"

namespace schreier {

struct NormCertificate {
  Rational value;
  FiniteSet witness;  // a norming set E in the family
  // Dual-norm extras: the optimal primal point and its tight constraint sets.
  RationalVector primal_witness;
  std::vector<FiniteSet> tight_sets;
};

// ||x||_xi = max over E in S_xi of the l1 mass of x on E. Exact branch and
// bound over admissible extensions with remaining-mass pruning; only
// E inside supp(x) matter since the family is hereditary.
NormCertificate schreier_norm(const RationalVector& x, const Ordinal& xi);

// Same search over A_n[S_xi].
Rational An_seminorm(const RationalVector& x, const Ordinal& xi, long long n);

// Max l1 capture over an arbitrary hereditary family given by an extension
// predicate; the building block behind both norms above.
NormCertificate family_norm(
    const RationalVector& x,
    const std::function<bool(const FiniteSet&)>& member);

// sup { |x*(x)| : ||x||_xi <= 1 } as an exact LP over the section of the
// dual ball: max sum |x*_i| t_i with t >= 0 and sum_{i in E} t_i <= 1 for
// E in S_xi inside supp(x*). Constraints are generated by separation with
// the norm engine; Bland's rule guards cycling.
NormCertificate dual_norm(const RationalVector& xstar, const Ordinal& xi);

// Independent oracle: enumerate the polytope's vertices by solving all
// square subsystems of tight constraints. Only for small supports.
Rational dual_norm_vertex_oracle(const RationalVector& xstar, const Ordinal& xi);

struct DominationReport {
  bool holds = true;
  Rational worst_ratio;                 // max ||sum a A|| / ||sum a B||
  std::vector<Rational> worst_coeffs;
  long long trials = 0;
};

// Checks ||sum a_i A_i||_xiA <= C ||sum a_i B_i||_xiB over nonnegative
// coefficient lattices (denominators <= 4) when len <= exhaustive_len, plus
// seeded random samples. Report-only: never throws on failure.
DominationReport check_domination(const std::vector<RationalVector>& A,
                                  const std::vector<RationalVector>& B,
                                  const Rational& C, const Ordinal& xiA,
                                  const Ordinal& xiB, int exhaustive_len = 4,
                                  long long samples = 200,
                                  std::uint64_t seed = 0);

struct SpreadingModelReport {
  bool holds = true;
  Rational worst_constant;
  FiniteSet worst_set;
  long long checks = 0;
};

// l1 case: for every E in S_rho over [1, |X|] and lattice coefficients,
// ||sum_{i in E} a_i X_i||_xi >= C sum |a_i|. Reports the worst constant.
SpreadingModelReport ell1_sm_check(const std::vector<RationalVector>& X,
                                   const Ordinal& rho, const Ordinal& xi,
                                   const Rational& C);

// c0 case: for every E in S_rho, ||sum_{i in E} Xstar_i||_xi <= C.
SpreadingModelReport c0_sm_check(const std::vector<RationalVector>& Xstar,
                                 const Ordinal& rho, const Ordinal& xi,
                                 const Rational& C);

// Coefficients of magnitude > eps go left, the rest go right; supports are
// disjoint and the parts sum back to x*.
std::pair<RationalVector, RationalVector> split_by_size(const RationalVector& xstar,
                                                        const Rational& eps);

struct StripReport {
  RationalVector x;
  Rational pairing;      // x*(x), expected > 1 - eps
  Rational beta_norm;    // ||x||_beta, expected <= eps
  long long level;       // the l used
  FiniteSet removed;     // the union of stripped pieces
};

// Norming-by-flat-vector procedure: from a unit dual functional with small
// sup norm supported far out, produce x with x*(x) > 1 - eps and
// ||x||_beta <= eps. Greedily removes l disjoint S_beta-optimal pieces of a
// primal norming vector; the union is checked to stay admissible in S_xi.
// DomainError (naming the bound) when a precondition fails.
StripReport strip_large_part(const RationalVector& xstar, const Ordinal& beta,
                             const Ordinal& xi, const Rational& eps);

}  // namespace schreier

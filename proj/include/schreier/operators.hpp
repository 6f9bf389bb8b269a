#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schreier/interval_set.hpp"
#include "schreier/pairs.hpp"

namespace schreier {

// Finite section of an operator between Schreier-normed spaces: a sparse
// rational matrix with the two levels attached.
struct FiniteOperator {
  Ordinal domain_xi;
  Ordinal codomain_xi;
  long long dimension = 0;  // acts on coordinates [1, dimension]
  std::map<std::pair<long long, long long>, Rational> entries;  // (row, col)

  void set(long long row, long long col, const Rational& v);
  Rational at(long long row, long long col) const;
  RationalVector apply(const RationalVector& x) const;
  bool nonnegative() const;
  static FiniteOperator rank_one_sum(const std::vector<RationalVector>& X,
                                     const std::vector<RationalVector>& Xstar,
                                     const Ordinal& domain, const Ordinal& codomain);
};

// Identity matrix on [1, N] viewed from the xi-norm into the zeta-norm.
FiniteOperator formal_identity(const Ordinal& xi, const Ordinal& zeta, long long N);

struct OpNormBracket {
  Rational lower;
  Rational upper;
  bool exact() const { return lower == upper; }
};

// Operator norm of the finite section. Entrywise nonnegative sections get
// the exact value (branch and bound over codomain family sets, an exact LP
// per candidate); general sign patterns get a bracket: structured lower
// bounds and the exact norm of |T| as the upper bound.
OpNormBracket op_norm(const FiniteOperator& T);

// Uniform-coefficient runs: value-contiguous pieces with one coefficient
// each, the compact form of an average too large to materialize.
struct UniformRun {
  long long start;
  long long length;
  Rational coeff;
};

struct SsWitnessResult {
  bool explicit_form = true;
  RationalVector u;               // explicit form
  FiniteSet support;              // explicit form
  std::vector<UniformRun> runs;   // compact form when too large
  Rational mass;                  // l1 mass, exactly 1
  Rational level_norm;            // || u ||_rho, verified < eps
  Ordinal level;                  // rho
};

// Unit-l1-mass vector supported on a member of S_(rho+1) with rho-norm < eps,
// the vector that exhibits strict singularity one level up. Falls back to
// the run form when the needed block cannot be materialized (only rho <= 1
// admits the closed run form; deeper levels are towers).
SsWitnessResult ss_witness(const Ordinal& xi, const Ordinal& zeta, const Ordinal& rho,
                           const Rational& eps);

// Exact l1 mass of the run form on the best single S_1 set; used to verify
// level_norm for rho = 1 without materializing.
Rational runs_s1_norm(const std::vector<UniformRun>& runs);

struct NonSsWitnessResult {
  FiniteSet index_set;    // E in S_rho (indices or values, see basis_route)
  FiniteSet support_set;  // union of supports carrying the equality
  bool basis_route;       // built on raw basis vectors past a tail bound
  bool equality;          // || sum_{i in E} a_i x_i ||_xi == sum |a_i| verified
};

// A set on which lower l1 behavior holds exactly, witnessing that the
// identity does not shrink at level rho.
NonSsWitnessResult non_ss_witness(const Ordinal& xi, const Ordinal& rho,
                                  long long horizon);

struct SsChainFactor {
  Ordinal from_level;  // rho_s
  Ordinal to_level;    // rho_(s-1)
  SchreierPair domain_pair;
  Rational witness_image_norm;   // || T u || for the singularity witness
  FiniteSet witness_indices;
  bool witness_small = false;    // image norm < the requested eps
};

struct SsChainResult {
  std::vector<Ordinal> levels;   // R(xi)
  std::vector<SsChainFactor> factors;
  bool composite_fixes = false;  // T_1...T_k x_i^k == x_i^0 for i <= horizon
  Rational min_separation;       // min pairwise distance of the fixed images
  std::string note;
};

// Chain of strictly-singular finite sections stepping down R(xi) one level
// at a time, with a non-compactness certificate: the composite fixes the
// designated vectors exactly and their images stay 1-separated.
SsChainResult build_ss_chain(const Ordinal& xi, long long horizon,
                             const Rational& witness_eps = rational(1, 8));

// Total finite table psi: domain value -> codomain value.
struct IndexMap {
  std::map<long long, long long> table;
  FiniteSet preimage(const FiniteSet& F) const;
};

struct InjectivityReport {
  Rational max_ratio;
  FiniteSet witness;  // the F attaining it
  long long sets_checked = 0;
};

// max over F in S_xi inside [1, horizon] of tau(psi^{-1}(F)) / max(1, tau(F)).
// A growth certificate at the horizon, not a decision of the full supremum.
InjectivityReport xi_injectivity_report(const IndexMap& psi, const Ordinal& xi,
                                        long long horizon);

struct DyadicFamily {
  std::vector<IntervalSet> sets;
  std::vector<BigInt> tau_values;       // recomputed through the interval engine
  bool conditions_hold = false;         // gap, cardinality, tau growth
  std::string detail;
};

// Sets F_1 < F_2 < ... with min F_(i+1) beyond both max F_i and the total
// size so far, and tau exceeding i times the accumulated tau. Built from
// successive maximal blocks; interval arithmetic carries the sizes. Finite
// xi only: deeper levels produce towers (ResourceError explains the size).
DyadicFamily dyadic_family(const Ordinal& xi, int n);

IntervalSet branch_union(const std::vector<IntervalSet>& family,
                         const std::vector<int>& indices);

}  // namespace schreier

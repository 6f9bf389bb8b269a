#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schreier/finite_set.hpp"
#include "schreier/index_stream.hpp"
#include "schreier/ordinal.hpp"

namespace schreier {

// Hierarchy of families S_xi of finite subsets of N:
//   S_0   = empty set and singletons,
//   S_(z+1) = unions of at most min E successive nonempty members of S_z,
//   S_xi  = { E : E in S_(xi_(min E) + 1) } for limit xi,
// where xi_n is the canonical fundamental sequence from the ordinal module.
// Family identity everywhere below depends on that canonical choice.

// E in S_xi. Successor levels reduce to the greedy block count (tau).
bool is_member(const FiniteSet& E, const Ordinal& xi);

// E in A_n[S_xi]: a union of at most n successive members.
bool is_member_An(const FiniteSet& E, const Ordinal& xi, long long n);

// Greedy count of successive maximal-initial S_xi segments covering A.
// Agrees with tau_oracle (minimality) — enforced by tests.
long long tau(const FiniteSet& A, const Ordinal& xi);

// Exact minimum over all partitions of A into successive S_xi segments,
// by dynamic programming over split points. Independent of the greedy path.
long long tau_oracle(const FiniteSet& A, const Ordinal& xi);

// E in S_xi maximal, i.e. E^(max E + 1) leaves the family (single-extension
// test; one witness extension decides all). DomainError if E not in S_xi.
bool is_maximal(const FiniteSet& E, const Ordinal& xi);

// Length of the first maximal S_xi block of the stream starting at 1-based
// position start_pos. Throws ResourceError if the block would exceed budget
// elements (block sizes grow doubly-exponentially with the level).
long long stream_block_length(const IndexStream& M, long long start_pos,
                              const Ordinal& xi, long long budget);

// First `count` blocks of the unique partition of M into successive maximal
// S_xi members.
std::vector<FiniteSet> maximal_partition(const IndexStream& M, const Ordinal& xi,
                                         long long count);

// E in the modified family S^M_xi (pairwise disjoint unions instead of
// successive ones), decided by exhaustive dynamic programming over subsets of
// [1, universe]. Used as the oracle for the family-equality checks.
// ResourceError if max E exceeds the brute-force universe cap.
bool is_member_modified(const FiniteSet& E, const Ordinal& xi);

// Reusable subset tables for one universe [1, n]; is_member_modified wraps a
// shared instance. Not thread-safe.
class ModifiedMembership {
 public:
  explicit ModifiedMembership(int universe);
  bool is_member(const FiniteSet& E, const Ordinal& xi);
  int universe() const { return universe_; }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  int universe_;
};

// Every member (resp. every family-wide maximal member) of S_xi inside [1,N].
std::vector<FiniteSet> enumerate_members(const Ordinal& xi, int N);
std::vector<FiniteSet> enumerate_maximal(const Ordinal& xi, int N);
// Streaming form; returns false if the visitor aborted.
bool for_each_member(const Ordinal& xi, int N,
                     const std::function<bool(const FiniteSet&)>& visit);

// Least m <= N such that every E in S_beta with E inside [m, N] lies in
// S_xi, by exhaustive enumeration; nullopt if no m <= N works. The value is
// a certificate only up to horizon N.
std::optional<long long> tail_bound_empirical(const Ordinal& beta, const Ordinal& xi,
                                              int N);

// Index selection behind the union-closure procedure: a thinned subsequence
// L of K with L(i) >= i*n, under which unions of blocks indexed along L over
// sets F in S_rho land in S_(gamma+rho). With the canonical fundamental
// sequences the transfinite recursion collapses to this single base rule;
// the guarantee is certified at a finite horizon by
// certify_union_selection, and a certificate failure is surfaced, never
// repaired. blocks, when nonempty, are validated against the precondition
// (successive, i <= E_i, E_i in A_n[S_gamma]).
IndexStream select_union_stream(const Ordinal& gamma, const Ordinal& rho,
                                const IndexStream& K, long long n,
                                const std::vector<FiniteSet>& blocks = {});

struct SelectionCertificate {
  bool ok = true;
  FiniteSet failing_set;  // the F (or E) that broke the inclusion
  std::string detail;
};

// Checks, for every nonempty F in S_rho with F inside [1, index_horizon],
// that the union of block(L(j)) over j in F lies in S_(gamma+rho).
SelectionCertificate certify_union_selection(
    const Ordinal& gamma, const Ordinal& rho, const IndexStream& L,
    const std::function<FiniteSet(long long)>& block, long long index_horizon);

// Stream M such that every E in S_(gamma+delta) splits into successive
// S_gamma pieces whose minima, mapped through M as positions, form an
// S_delta set. Certified per-set by certify_split_witness.
IndexStream select_split_witness(const Ordinal& gamma, const Ordinal& delta);

// Finds such a split of E (DFS over segment boundaries), or nullopt.
std::optional<std::vector<FiniteSet>> certify_split_witness(const Ordinal& gamma,
                                                            const Ordinal& delta,
                                                            const IndexStream& M,
                                                            const FiniteSet& E);

// Stream N: whenever F in S_delta and successive E_i in S_gamma satisfy
// min E_i >= N(i) for i in F, the union lies in S_(gamma+delta).
IndexStream select_glue_witness(const Ordinal& gamma, const Ordinal& delta);

}  // namespace schreier

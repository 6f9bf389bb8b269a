#pragma once

#include <vector>

#include "schreier/finite_set.hpp"
#include "schreier/rational.hpp"

namespace schreier {

// Finite subset of N stored as disjoint closed intervals [lo, hi] with
// arbitrary-precision endpoints. The greedy block counts of finite-level
// families are computed directly on the interval form, so sets whose
// cardinality is far past materializable (they arise as unions of successive
// maximal blocks) still admit exact arithmetic.
class IntervalSet {
 public:
  struct Interval {
    BigInt lo;
    BigInt hi;  // inclusive
  };

  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);  // validates, merges
  static IntervalSet from_finite_set(const FiniteSet& E);
  static IntervalSet single(const BigInt& lo, const BigInt& hi);

  bool empty() const { return intervals_.empty(); }
  BigInt cardinality() const;
  BigInt min() const;
  BigInt max() const;
  const std::vector<Interval>& intervals() const { return intervals_; }

  IntervalSet set_union(const IntervalSet& other) const;
  // Explicit form; ResourceError if the cardinality exceeds the cap.
  FiniteSet materialize() const;

  bool operator==(const IntervalSet& other) const;

 private:
  std::vector<Interval> intervals_;
};

// Greedy count of successive maximal family segments covering the set, at a
// finite level: level 0 counts elements, level k+1 strips min-many level-k
// segments at a time. Matches tau() on materializable sets (tested), and
// runs on the interval form in time polynomial in the interval count and the
// level, not the cardinality.
BigInt interval_tau(const IntervalSet& A, int level);

// Endpoint of the maximal level-k block of {v, v+1, ...} starting at v:
// level 0 ends at v, level 1 at 2v-1, level 2 at v*2^v - 1. ResourceError
// when the endpoint would not fit in memory (it is a tower for deep levels).
BigInt interval_block_end(int level, const BigInt& start);

}  // namespace schreier

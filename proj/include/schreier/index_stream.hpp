#pragma once

#include <cstdint>
#include <vector>

#include "schreier/finite_set.hpp"

namespace schreier {

// Infinite strictly increasing subset of N, realized as an explicit finite
// prefix followed by an arithmetic tail. This class of streams is closed
// under every derivation used here (tails, finite differences, thinning),
// element queries are pure arithmetic, and values are deterministic, so
// concurrent queries need no synchronization.
class IndexStream {
 public:
  // Full N by default.
  IndexStream() : tail_start_(1), tail_step_(1) {}
  IndexStream(std::vector<long long> prefix, long long tail_start, long long tail_step);

  static IndexStream naturals() { return IndexStream(); }
  static IndexStream arithmetic(long long start, long long step);
  static IndexStream evens() { return arithmetic(2, 2); }
  // Strictly increasing random prefix (gap in [1, max_gap]) continued
  // arithmetically; deterministic for a fixed seed.
  static IndexStream seeded(std::uint64_t seed, int prefix_len = 64, int max_gap = 3);

  // 1-based k-th smallest element.
  long long at(long long k) const;
  FiniteSet first(long long count) const;

  // Number of elements <= v.
  long long count_upto(long long v) const;
  bool contains(long long v) const;

  // Stream without its first count elements.
  IndexStream drop(long long count) const;
  // Elements >= v.
  IndexStream tail_from_value(long long v) const;
  // Stream minus a finite set.
  IndexStream minus(const FiniteSet& removed) const;

  const std::vector<long long>& prefix() const { return prefix_; }
  long long tail_start() const { return tail_start_; }
  long long tail_step() const { return tail_step_; }
  bool is_all_naturals() const {
    return prefix_.empty() && tail_start_ == 1 && tail_step_ == 1;
  }

  bool operator==(const IndexStream& other) const = default;

 private:
  std::vector<long long> prefix_;
  long long tail_start_;
  long long tail_step_;
};

}  // namespace schreier

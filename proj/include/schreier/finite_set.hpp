#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

namespace schreier {

// The conventions max({}) = 0 and min({}) = +inf are used throughout.
inline constexpr long long kMinOfEmpty = std::numeric_limits<long long>::max();

// Strictly increasing sequence of integers >= 1; may be empty.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<long long> elems);
  explicit FiniteSet(std::vector<long long> elems);  // validates ordering
  // Sorts and dedups arbitrary input.
  static FiniteSet from_unsorted(std::vector<long long> elems);
  static FiniteSet interval(long long lo, long long hi);  // [lo, hi], empty if lo > hi

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  long long min() const { return elems_.empty() ? kMinOfEmpty : elems_.front(); }
  long long max() const { return elems_.empty() ? 0 : elems_.back(); }
  long long at(std::size_t i) const { return elems_[i]; }  // 0-based
  bool contains(long long v) const;

  const std::vector<long long>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  FiniteSet slice(std::size_t from, std::size_t count) const;
  FiniteSet appended(long long v) const;  // v must exceed max()
  FiniteSet set_union(const FiniteSet& other) const;
  FiniteSet set_difference(const FiniteSet& other) const;
  FiniteSet set_intersection(const FiniteSet& other) const;
  bool subset_of(const FiniteSet& other) const;

  bool operator==(const FiniteSet& other) const { return elems_ == other.elems_; }
  bool operator<(const FiniteSet& other) const { return elems_ < other.elems_; }

 private:
  std::vector<long long> elems_;
};

// target is a spread of source: same size and source(i) <= target(i) for all i.
bool is_spread(const FiniteSet& target, const FiniteSet& source);

}  // namespace schreier

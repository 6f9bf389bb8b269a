#include "schreier/interval_set.hpp"

#include <algorithm>

#include "schreier/config.hpp"

namespace schreier {

IntervalSet::IntervalSet(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const Interval& iv : intervals_) {
    if (iv.lo < 1 || iv.hi < iv.lo)
      throw DomainError("interval set: malformed interval");
    if (!merged.empty() && iv.lo <= merged.back().hi + 1)
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    else
      merged.push_back(iv);
  }
  intervals_ = std::move(merged);
}

IntervalSet IntervalSet::from_finite_set(const FiniteSet& E) {
  std::vector<Interval> ivs;
  for (long long v : E) ivs.push_back({BigInt(v), BigInt(v)});
  return IntervalSet(std::move(ivs));
}

IntervalSet IntervalSet::single(const BigInt& lo, const BigInt& hi) {
  return IntervalSet({Interval{lo, hi}});
}

BigInt IntervalSet::cardinality() const {
  BigInt total = 0;
  for (const Interval& iv : intervals_) total += iv.hi - iv.lo + 1;
  return total;
}

BigInt IntervalSet::min() const {
  if (empty()) throw DomainError("interval set: min of empty set");
  return intervals_.front().lo;
}

BigInt IntervalSet::max() const {
  if (empty()) throw DomainError("interval set: max of empty set");
  return intervals_.back().hi;
}

IntervalSet IntervalSet::set_union(const IntervalSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return IntervalSet(std::move(all));
}

FiniteSet IntervalSet::materialize() const {
  if (cardinality() > caps().max_block_elements)
    throw ResourceError("interval set too large to materialize");
  std::vector<long long> elems;
  for (const Interval& iv : intervals_)
    for (BigInt v = iv.lo; v <= iv.hi; ++v)
      elems.push_back(static_cast<long long>(v));
  return FiniteSet(std::move(elems));
}

bool IntervalSet::operator==(const IntervalSet& other) const {
  if (intervals_.size() != other.intervals_.size()) return false;
  for (std::size_t i = 0; i < intervals_.size(); ++i)
    if (intervals_[i].lo != other.intervals_[i].lo ||
        intervals_[i].hi != other.intervals_[i].hi)
      return false;
  return true;
}

namespace {

// Cursor into the interval sequence.
struct Cursor {
  const std::vector<IntervalSet::Interval>* ivs;
  std::size_t idx = 0;
  BigInt pos;  // current value when idx is in range

  explicit Cursor(const IntervalSet& s) : ivs(&s.intervals()) {
    if (idx < ivs->size()) pos = (*ivs)[idx].lo;
  }
  bool done() const { return idx >= ivs->size(); }
  BigInt value() const { return pos; }
  BigInt remaining() const {
    BigInt total = 0;
    for (std::size_t i = idx; i < ivs->size(); ++i)
      total += (*ivs)[i].hi - std::max((*ivs)[i].lo, i == idx ? pos : (*ivs)[i].lo) + 1;
    return total;
  }
  // Advance by count elements (or to the end).
  void advance(BigInt count) {
    while (count > 0 && !done()) {
      BigInt here = (*ivs)[idx].hi - pos + 1;
      if (count < here) {
        pos += count;
        return;
      }
      count -= here;
      ++idx;
      if (idx < ivs->size()) pos = (*ivs)[idx].lo;
    }
  }
};

// One greedy maximal level-k segment from the cursor position; advances the
// cursor past it. Level 0 takes one element; level k takes v = value-many
// level-(k-1) segments, stopping early when the set is exhausted.
void strip_segment(Cursor& cur, int level) {
  if (cur.done()) return;
  if (level == 0) {
    cur.advance(1);
    return;
  }
  if (level == 1) {
    cur.advance(cur.value());
    return;
  }
  BigInt budget = cur.value();
  for (BigInt j = 0; j < budget && !cur.done(); ++j) strip_segment(cur, level - 1);
}

}  // namespace

BigInt interval_tau(const IntervalSet& A, int level) {
  if (level < 0) throw DomainError("interval_tau: negative level");
  if (level == 0) return A.cardinality();
  Cursor cur(A);
  BigInt count = 0;
  while (!cur.done()) {
    strip_segment(cur, level);
    ++count;
    if (count > BigInt(1) << 24)
      throw ResourceError("interval_tau: block count out of range");
  }
  return count;
}

BigInt interval_block_end(int level, const BigInt& start) {
  if (start < 1) throw DomainError("interval_block_end: start must be >= 1");
  if (level == 0) return start;
  if (level == 1) return 2 * start - 1;
  if (level == 2) {
    // v blocks doubling from v: ends at v * 2^v - 1
    if (start > 65536)
      throw ResourceError(
          "interval_block_end: level-2 block at " +
          (msb(start) > 64 ? "a > 2^" + std::to_string(msb(start)) + " start"
                           : start.str()) +
          " has an endpoint of about " + start.str().substr(0, 12) +
          "... bits, beyond any materializable representation");
    return (start << static_cast<unsigned>(start)) - 1;
  }
  // Deeper levels: iterate sub-blocks with a representability guard.
  BigInt pos = start;
  for (BigInt j = 0; j < start; ++j) {
    if (msb(pos) > 1 << 22)
      throw ResourceError("interval_block_end: endpoint exceeds representable size");
    pos = interval_block_end(level - 1, pos) + 1;
  }
  return pos - 1;
}

}  // namespace schreier

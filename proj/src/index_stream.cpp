#include "schreier/index_stream.hpp"

#include <random>

#include "schreier/config.hpp"

namespace schreier {

IndexStream::IndexStream(std::vector<long long> prefix, long long tail_start,
                         long long tail_step)
    : prefix_(std::move(prefix)), tail_start_(tail_start), tail_step_(tail_step) {
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i] < 1) throw DomainError("index stream: elements must be >= 1");
    if (i > 0 && prefix_[i] <= prefix_[i - 1])
      throw DomainError("index stream: prefix must strictly increase");
  }
  if (tail_step_ < 1) throw DomainError("index stream: tail step must be >= 1");
  if (tail_start_ < 1 || (!prefix_.empty() && tail_start_ <= prefix_.back()))
    throw DomainError("index stream: tail must start past the prefix");
}

IndexStream IndexStream::arithmetic(long long start, long long step) {
  return IndexStream({}, start, step);
}

IndexStream IndexStream::seeded(std::uint64_t seed, int prefix_len, int max_gap) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> gap(1, max_gap);
  std::vector<long long> prefix;
  long long v = 0;
  for (int i = 0; i < prefix_len; ++i) {
    v += gap(rng);
    prefix.push_back(v);
  }
  long long step = gap(rng);
  return IndexStream(std::move(prefix), v + step, step);
}

long long IndexStream::at(long long k) const {
  if (k < 1) throw DomainError("index stream: positions are 1-based");
  if (k <= static_cast<long long>(prefix_.size())) return prefix_[k - 1];
  return tail_start_ + (k - 1 - static_cast<long long>(prefix_.size())) * tail_step_;
}

FiniteSet IndexStream::first(long long count) const {
  std::vector<long long> elems;
  elems.reserve(count);
  for (long long k = 1; k <= count; ++k) elems.push_back(at(k));
  return FiniteSet(std::move(elems));
}

long long IndexStream::count_upto(long long v) const {
  long long count = 0;
  for (long long p : prefix_) {
    if (p > v) return count;
    ++count;
  }
  if (v >= tail_start_) count += (v - tail_start_) / tail_step_ + 1;
  return count;
}

bool IndexStream::contains(long long v) const {
  if (v < 1) return false;
  for (long long p : prefix_)
    if (p == v) return true;
  return v >= tail_start_ && (v - tail_start_) % tail_step_ == 0;
}

IndexStream IndexStream::drop(long long count) const {
  if (count < 0) throw DomainError("index stream: cannot drop a negative count");
  if (count < static_cast<long long>(prefix_.size())) {
    std::vector<long long> rest(prefix_.begin() + count, prefix_.end());
    return IndexStream(std::move(rest), tail_start_, tail_step_);
  }
  long long skipped = count - static_cast<long long>(prefix_.size());
  return IndexStream({}, tail_start_ + skipped * tail_step_, tail_step_);
}

IndexStream IndexStream::tail_from_value(long long v) const {
  return drop(count_upto(v - 1));
}

IndexStream IndexStream::minus(const FiniteSet& removed) const {
  if (removed.empty()) return *this;
  // Everything at or below max(removed) becomes explicit prefix.
  std::vector<long long> prefix;
  long long k = 1;
  while (at(k) <= removed.max()) {
    if (!removed.contains(at(k))) prefix.push_back(at(k));
    ++k;
  }
  IndexStream rest = drop(k - 1);
  if (!rest.prefix_.empty()) {
    prefix.insert(prefix.end(), rest.prefix_.begin(), rest.prefix_.end());
    return IndexStream(std::move(prefix), rest.tail_start_, rest.tail_step_);
  }
  return IndexStream(std::move(prefix), rest.tail_start_, rest.tail_step_);
}

}  // namespace schreier

#include "schreier/rational_vector.hpp"

#include <algorithm>

#include "schreier/config.hpp"

namespace schreier {

RationalVector RationalVector::indicator(const FiniteSet& E) {
  RationalVector v;
  for (long long i : E) v.entries_.emplace_back(i, Rational(1));
  return v;
}

FiniteSet RationalVector::support() const {
  std::vector<long long> idx;
  idx.reserve(entries_.size());
  for (const auto& [i, c] : entries_) idx.push_back(i);
  return FiniteSet(std::move(idx));
}

Rational RationalVector::at(long long index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const auto& entry, long long key) { return entry.first < key; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational(0);
}

void RationalVector::set(long long index, const Rational& value) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const auto& entry, long long key) { return entry.first < key; });
  if (it != entries_.end() && it->first == index) {
    if (value == 0)
      entries_.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    entries_.emplace(it, index, value);
  }
}

void RationalVector::add_to(long long index, const Rational& delta) {
  set(index, at(index) + delta);
}

RationalVector RationalVector::operator+(const RationalVector& other) const {
  RationalVector out;
  std::size_t a = 0, b = 0;
  while (a < entries_.size() || b < other.entries_.size()) {
    if (b == other.entries_.size() ||
        (a < entries_.size() && entries_[a].first < other.entries_[b].first)) {
      out.entries_.push_back(entries_[a++]);
    } else if (a == entries_.size() || other.entries_[b].first < entries_[a].first) {
      out.entries_.push_back(other.entries_[b++]);
    } else {
      Rational sum = entries_[a].second + other.entries_[b].second;
      if (sum != 0) out.entries_.emplace_back(entries_[a].first, sum);
      ++a;
      ++b;
    }
  }
  return out;
}

RationalVector RationalVector::operator-(const RationalVector& other) const {
  return *this + other.scaled(Rational(-1));
}

RationalVector RationalVector::scaled(const Rational& c) const {
  RationalVector out;
  if (c == 0) return out;
  out.entries_ = entries_;
  for (auto& [i, v] : out.entries_) v *= c;
  return out;
}

RationalVector RationalVector::abs() const {
  RationalVector out = *this;
  for (auto& [i, v] : out.entries_)
    if (v < 0) v = -v;
  return out;
}

RationalVector RationalVector::restricted(const FiniteSet& E) const {
  RationalVector out;
  for (const auto& [i, v] : entries_)
    if (E.contains(i)) out.entries_.emplace_back(i, v);
  return out;
}

RationalVector RationalVector::truncated(long long bound) const {
  RationalVector out;
  for (const auto& [i, v] : entries_) {
    if (i > bound) break;
    out.entries_.emplace_back(i, v);
  }
  return out;
}

Rational RationalVector::l1_mass() const {
  Rational total(0);
  for (const auto& [i, v] : entries_) total += v < 0 ? -v : v;
  return total;
}

Rational RationalVector::max_abs() const {
  Rational best(0);
  for (const auto& [i, v] : entries_) best = std::max(best, v < 0 ? -v : v);
  return best;
}

Rational RationalVector::min_abs_nonzero() const {
  if (entries_.empty()) return Rational(0);
  Rational best = entries_.front().second < 0 ? -entries_.front().second
                                              : entries_.front().second;
  for (const auto& [i, v] : entries_) best = std::min(best, v < 0 ? -v : v);
  return best;
}

Rational RationalVector::mass_on(const FiniteSet& E) const {
  Rational total(0);
  for (long long i : E) {
    Rational v = at(i);
    total += v < 0 ? -v : v;
  }
  return total;
}

Rational RationalVector::dot(const RationalVector& other) const {
  Rational total(0);
  std::size_t a = 0, b = 0;
  while (a < entries_.size() && b < other.entries_.size()) {
    if (entries_[a].first < other.entries_[b].first)
      ++a;
    else if (other.entries_[b].first < entries_[a].first)
      ++b;
    else {
      total += entries_[a].second * other.entries_[b].second;
      ++a;
      ++b;
    }
  }
  return total;
}

}  // namespace schreier

#include "schreier/finite_set.hpp"

#include <algorithm>

#include "schreier/config.hpp"

namespace schreier {

namespace {
void validate(const std::vector<long long>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1) throw DomainError("finite set: elements must be >= 1");
    if (i > 0 && elems[i] <= elems[i - 1])
      throw DomainError("finite set: elements must strictly increase");
  }
}
}  // namespace

FiniteSet::FiniteSet(std::initializer_list<long long> elems)
    : elems_(elems) {
  validate(elems_);
}

FiniteSet::FiniteSet(std::vector<long long> elems) : elems_(std::move(elems)) {
  validate(elems_);
}

FiniteSet FiniteSet::from_unsorted(std::vector<long long> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return FiniteSet(std::move(elems));
}

FiniteSet FiniteSet::interval(long long lo, long long hi) {
  FiniteSet result;
  if (lo < 1) throw DomainError("finite set: elements must be >= 1");
  for (long long v = lo; v <= hi; ++v) result.elems_.push_back(v);
  return result;
}

bool FiniteSet::contains(long long v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

FiniteSet FiniteSet::slice(std::size_t from, std::size_t count) const {
  FiniteSet result;
  for (std::size_t i = from; i < elems_.size() && i < from + count; ++i)
    result.elems_.push_back(elems_[i]);
  return result;
}

FiniteSet FiniteSet::appended(long long v) const {
  if (v <= max()) throw DomainError("finite set: appended element must exceed max");
  FiniteSet result = *this;
  result.elems_.push_back(v);
  return result;
}

FiniteSet FiniteSet::set_union(const FiniteSet& other) const {
  FiniteSet result;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                 other.elems_.end(), std::back_inserter(result.elems_));
  return result;
}

FiniteSet FiniteSet::set_difference(const FiniteSet& other) const {
  FiniteSet result;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                      other.elems_.end(), std::back_inserter(result.elems_));
  return result;
}

FiniteSet FiniteSet::set_intersection(const FiniteSet& other) const {
  FiniteSet result;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(result.elems_));
  return result;
}

bool FiniteSet::subset_of(const FiniteSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(),
                       elems_.end());
}

bool is_spread(const FiniteSet& target, const FiniteSet& source) {
  if (target.size() != source.size()) return false;
  for (std::size_t i = 0; i < target.size(); ++i)
    if (source.at(i) > target.at(i)) return false;
  return true;
}

}  // namespace schreier

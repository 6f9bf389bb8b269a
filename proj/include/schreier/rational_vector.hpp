#pragma once

#include <utility>
#include <vector>

#include "schreier/finite_set.hpp"
#include "schreier/rational.hpp"

namespace schreier {

// Finitely supported vector with exact rational coefficients, stored as
// (index, value) pairs with strictly increasing indices and no zeros.
class RationalVector {
 public:
  RationalVector() = default;

  static RationalVector basis(long long i) {
    RationalVector v;
    v.entries_.emplace_back(i, Rational(1));
    return v;
  }
  // Indicator of a set (all coefficients 1).
  static RationalVector indicator(const FiniteSet& E);

  bool zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  FiniteSet support() const;
  Rational at(long long index) const;
  const std::vector<std::pair<long long, Rational>>& entries() const {
    return entries_;
  }

  void set(long long index, const Rational& value);
  void add_to(long long index, const Rational& delta);

  RationalVector operator+(const RationalVector& other) const;
  RationalVector operator-(const RationalVector& other) const;
  RationalVector scaled(const Rational& c) const;
  RationalVector abs() const;
  // Restriction to a coordinate set.
  RationalVector restricted(const FiniteSet& E) const;
  // Restriction to indices <= bound.
  RationalVector truncated(long long bound) const;

  Rational l1_mass() const;
  Rational max_abs() const;
  Rational min_abs_nonzero() const;  // 0 for the zero vector
  // Sum over E of |coefficients|.
  Rational mass_on(const FiniteSet& E) const;
  // Pairing sum_i x*_i x_i.
  Rational dot(const RationalVector& other) const;

  bool operator==(const RationalVector& other) const = default;

 private:
  std::vector<std::pair<long long, Rational>> entries_;
};

}  // namespace schreier

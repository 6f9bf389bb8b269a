#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace schreier {

// Ordinal below epsilon_0 in Cantor normal form: w^e[0]*c[0] + ... with
// strictly decreasing exponents and coefficients >= 1. The empty term list
// is 0. Exponents are ordinals themselves (hereditary representation).
class Ordinal {
 public:
  Ordinal() = default;
  static Ordinal finite(long long n);
  static Ordinal omega();
  // w^exponent * coefficient
  static Ordinal omega_power(const Ordinal& exponent, long long coefficient = 1);

  bool is_zero() const { return exponents_.empty(); }
  bool is_finite() const;
  // Finite value; DomainError if not finite.
  long long finite_value() const;
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }

  std::size_t term_count() const { return exponents_.size(); }
  const Ordinal& exponent(std::size_t i) const { return exponents_[i]; }
  long long coefficient(std::size_t i) const { return coeffs_[i]; }
  // Sum of all coefficients (the k of the unit expansion w^b1+...+w^bk).
  long long unit_length() const;

  int compare(const Ordinal& other) const;
  bool operator==(const Ordinal& other) const { return compare(other) == 0; }
  bool operator<(const Ordinal& other) const { return compare(other) < 0; }
  bool operator<=(const Ordinal& other) const { return compare(other) <= 0; }
  bool operator>(const Ordinal& other) const { return compare(other) > 0; }
  bool operator>=(const Ordinal& other) const { return compare(other) >= 0; }

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  // Predecessor of a successor ordinal; DomainError otherwise.
  Ordinal predecessor() const;

  std::string to_string() const;
  int depth() const;  // exponent nesting depth, 0 for finite ordinals

  void append_term(const Ordinal& exponent, long long coefficient);

 private:
  std::vector<Ordinal> exponents_;
  std::vector<long long> coeffs_;
};

// Parses the grammar
//   expr := term ('+' term)*
//   term := '0' | NAT | 'w' ['^' atom] ['*' NAT]
//   atom := NAT | 'w' | '(' expr ')'
// summing terms left to right with ordinal addition, so non-normal spellings
// like "1+w" normalize. Throws DomainError with the failing position.
Ordinal parse_ordinal(const std::string& text);

// The unique r with iota + r = xi; DomainError if iota > xi.
Ordinal left_subtract(const Ordinal& xi, const Ordinal& iota);

// {0} together with the proper unit-expansion prefixes of xi and xi itself,
// in increasing order. Size = unit_length(xi) + 1.
std::vector<Ordinal> i_set(const Ordinal& xi);
// {xi - iota : iota in i_set(xi)} = the unit-expansion suffixes, increasing.
std::vector<Ordinal> r_set(const Ordinal& xi);

// Canonical fundamental sequence of a limit ordinal:
//   (g + w^(b+1))[n] = g + w^b * n,   (g + w^l)[n] = g + w^(l[n]) for l limit.
// Strictly increasing in n with supremum xi. DomainError unless xi is limit.
Ordinal fundamental_sequence(const Ordinal& xi, long long n);

}  // namespace schreier

#include "schreier/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "schreier/config.hpp"

namespace schreier {

Caps& caps() {
  static Caps instance;
  return instance;
}

Ordinal Ordinal::finite(long long n) {
  if (n < 0) throw DomainError("ordinal: negative value");
  Ordinal result;
  if (n > 0) result.append_term(Ordinal(), n);
  return result;
}

Ordinal Ordinal::omega() { return omega_power(finite(1), 1); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, long long coefficient) {
  if (coefficient < 1) throw DomainError("ordinal: coefficient must be >= 1");
  Ordinal result;
  result.append_term(exponent, coefficient);
  return result;
}

void Ordinal::append_term(const Ordinal& exponent, long long coefficient) {
  if (coefficient < 1) throw DomainError("ordinal: coefficient must be >= 1");
  if (!exponents_.empty() && !(exponent < exponents_.back()))
    throw DomainError("ordinal: exponents must be strictly decreasing");
  exponents_.push_back(exponent);
  coeffs_.push_back(coefficient);
}

bool Ordinal::is_finite() const {
  return is_zero() || (term_count() == 1 && exponents_[0].is_zero());
}

long long Ordinal::finite_value() const {
  if (is_zero()) return 0;
  if (!is_finite()) throw DomainError("ordinal: not finite");
  return coeffs_[0];
}

bool Ordinal::is_successor() const {
  return !is_zero() && exponents_.back().is_zero();
}

long long Ordinal::unit_length() const {
  long long total = 0;
  for (long long c : coeffs_) total += c;
  return total;
}

int Ordinal::compare(const Ordinal& other) const {
  const std::size_t n = std::min(term_count(), other.term_count());
  for (std::size_t i = 0; i < n; ++i) {
    int c = exponents_[i].compare(other.exponents_[i]);
    if (c != 0) return c;
    if (coeffs_[i] != other.coeffs_[i]) return coeffs_[i] < other.coeffs_[i] ? -1 : 1;
  }
  if (term_count() == other.term_count()) return 0;
  return term_count() < other.term_count() ? -1 : 1;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.exponent(0);
  Ordinal result;
  std::size_t i = 0;
  while (i < a.term_count() && a.exponent(i) > lead) {
    result.append_term(a.exponent(i), a.coefficient(i));
    ++i;
  }
  std::size_t j = 0;
  if (i < a.term_count() && a.exponent(i) == lead) {
    result.append_term(lead, a.coefficient(i) + b.coefficient(0));
    j = 1;
  }
  for (; j < b.term_count(); ++j) result.append_term(b.exponent(j), b.coefficient(j));
  return result;
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw DomainError("ordinal: predecessor of non-successor");
  Ordinal result;
  for (std::size_t i = 0; i + 1 < term_count(); ++i)
    result.append_term(exponents_[i], coeffs_[i]);
  if (coeffs_.back() > 1) result.append_term(Ordinal(), coeffs_.back() - 1);
  return result;
}

Ordinal left_subtract(const Ordinal& xi, const Ordinal& iota) {
  if (iota > xi) throw DomainError("left_subtract: iota > xi");
  std::size_t k = 0;
  while (k < iota.term_count()) {
    // xi >= iota, so xi cannot run out of terms first.
    int ec = iota.exponent(k).compare(xi.exponent(k));
    if (ec < 0) break;  // the remaining suffix of xi absorbs iota's tail
    if (iota.coefficient(k) != xi.coefficient(k)) {
      Ordinal result;
      result.append_term(xi.exponent(k), xi.coefficient(k) - iota.coefficient(k));
      for (std::size_t i = k + 1; i < xi.term_count(); ++i)
        result.append_term(xi.exponent(i), xi.coefficient(i));
      return result;
    }
    ++k;
  }
  Ordinal result;
  for (std::size_t i = k; i < xi.term_count(); ++i)
    result.append_term(xi.exponent(i), xi.coefficient(i));
  return result;
}

std::vector<Ordinal> i_set(const Ordinal& xi) {
  std::vector<Ordinal> result;
  result.push_back(Ordinal());
  Ordinal prefix;
  for (std::size_t i = 0; i < xi.term_count(); ++i) {
    for (long long c = 1; c <= xi.coefficient(i); ++c)
      result.push_back(prefix + Ordinal::omega_power(xi.exponent(i), c));
    prefix = result.back();
  }
  return result;
}

std::vector<Ordinal> r_set(const Ordinal& xi) {
  std::vector<Ordinal> result;
  for (const Ordinal& iota : i_set(xi)) result.push_back(left_subtract(xi, iota));
  std::reverse(result.begin(), result.end());
  return result;
}

Ordinal fundamental_sequence(const Ordinal& xi, long long n) {
  if (!xi.is_limit()) throw DomainError("fundamental_sequence: ordinal is not a limit");
  if (n < 1) throw DomainError("fundamental_sequence: n must be >= 1");
  Ordinal prefix;
  const std::size_t last = xi.term_count() - 1;
  for (std::size_t i = 0; i < last; ++i)
    prefix.append_term(xi.exponent(i), xi.coefficient(i));
  const Ordinal& e = xi.exponent(last);
  if (xi.coefficient(last) > 1)
    prefix.append_term(e, xi.coefficient(last) - 1);
  if (e.is_successor()) {
    // (g + w^(b+1))[n] = g + w^b * n
    prefix.append_term(e.predecessor(), n);
    return prefix;
  }
  // (g + w^l)[n] = g + w^(l[n]) for limit l
  prefix.append_term(fundamental_sequence(e, n), 1);
  return prefix;
}

int Ordinal::depth() const {
  int d = 0;
  for (const Ordinal& e : exponents_) d = std::max(d, e.is_zero() ? 0 : 1 + e.depth());
  return d;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "ordinal parse error at position " << pos << ": " << msg;
    throw DomainError(os.str());
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long parse_nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      int digit = text[pos] - '0';
      if (value > (std::numeric_limits<long long>::max() - digit) / 10)
        fail("number too large");
      value = value * 10 + digit;
      ++pos;
    }
    return value;
  }

  Ordinal parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("expected exponent");
    if (text[pos] == 'w') {
      ++pos;
      return Ordinal::omega();
    }
    if (text[pos] == '(') {
      ++pos;
      Ordinal inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    return Ordinal::finite(parse_nat());
  }

  Ordinal parse_term() {
    skip_ws();
    if (pos >= text.size()) fail("expected term");
    if (text[pos] != 'w') {
      long long n = parse_nat();
      return Ordinal::finite(n);
    }
    ++pos;
    Ordinal exponent = Ordinal::finite(1);
    if (eat('^')) exponent = parse_atom();
    long long coefficient = 1;
    if (eat('*')) {
      coefficient = parse_nat();
      if (coefficient == 0) fail("coefficient 0 is not allowed");
    }
    return Ordinal::omega_power(exponent, coefficient);
  }

  Ordinal parse_expr() {
    Ordinal sum = parse_term();
    while (eat('+')) sum = sum + parse_term();
    return sum;
  }
};

std::string render_atom(const Ordinal& e) {
  if (e.is_finite()) return std::to_string(e.finite_value());
  if (e == Ordinal::omega()) return "w";
  return "(" + e.to_string() + ")";
}

}  // namespace

Ordinal parse_ordinal(const std::string& text) {
  Parser p(text);
  Ordinal result = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  if (result.depth() > caps().max_cnf_depth)
    throw ResourceError("ordinal exceeds configured CNF depth cap");
  return result;
}

std::string Ordinal::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < term_count(); ++i) {
    if (i > 0) os << "+";
    const Ordinal& e = exponents_[i];
    long long c = coeffs_[i];
    if (e.is_zero()) {
      os << c;
    } else {
      if (e.is_finite() && e.finite_value() == 1)
        os << "w";
      else
        os << "w^" << render_atom(e);
      if (c > 1) os << "*" << c;
    }
  }
  return os.str();
}

}  // namespace schreier

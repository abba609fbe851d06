#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "etor/arith.hpp"

namespace etor {

/// Sparse polynomial in two variables. Exponent pairs are (first, second),
/// conventionally (p, q) for the binary forms and (x, y) for the
/// discriminant table.
class BiPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  BiPoly() = default;
  static BiPoly constant(const Integer& c);
  static BiPoly monomial(const Integer& c, unsigned e1, unsigned e2);

  /// Parses e.g. "q^4-12q^3p+14q^2p^2" with variable letters v1, v2.
  static BiPoly parse(std::string_view text, char v1 = 'p', char v2 = 'q');

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  Integer coeff(unsigned e1, unsigned e2) const;

  /// Maximum total degree; -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;

  Integer eval(const Integer& a, const Integer& b) const;
  Rational eval(const Rational& a, const Rational& b) const;

  /// Formal substitution v^k -> v in the given variable (0 or 1); every
  /// exponent of that variable must be divisible by k.
  BiPoly contract(int variable, unsigned k) const;

  BiPoly pow(unsigned e) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Integer& s, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string(char v1 = 'p', char v2 = 'q') const;

 private:
  void add_term(Exponents e, const Integer& c);

  std::map<Exponents, Integer> terms_;
};

}  // namespace etor

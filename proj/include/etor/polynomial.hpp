#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "etor/arith.hpp"
#include "etor/errors.hpp"

namespace etor {

/// Dense univariate polynomial, lowest degree first. The highest stored
/// coefficient is nonzero unless the polynomial is zero (empty storage).
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
  static Polynomial monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  template <class Value>
  Value eval(const Value& x) const {
    Value acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Value(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Coeff& s, Polynomial a) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(Coeff(1)), base = *this;
    while (e > 0) {
      if (e & 1U) out = out * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return out;
  }

  /// Human-readable form in variable `var`, highest degree first.
  std::string to_string(char var = 'x') const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Parses a sum of terms like "54+972a-4050a^2" in the single variable `var`.
IntPolynomial parse_int_polynomial(std::string_view text, char var);

/// Content (gcd of coefficients, positive); zero for the zero polynomial.
Integer content(const IntPolynomial& f);

/// Rational coefficients cleared to an integer polynomial: returns (scale, g)
/// with f == scale * g and g primitive with positive leading coefficient.
std::pair<Rational, IntPolynomial> primitive_part(const RatPolynomial& f);

RatPolynomial to_rational(const IntPolynomial& f);

/// Exactly the rational roots of f, ascending. Candidates come from the
/// rational root theorem on the content- and x^v-stripped polynomial; divisor
/// enumeration needs both end coefficients factored within `trial_limit`.
std::vector<Rational> rational_roots(const IntPolynomial& f, std::uint64_t trial_limit = kDefaultTrialLimit);

/// Quotient and remainder over a field.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Monic gcd over Q (zero if both are zero).
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// Element of Q(x), kept reduced with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(RatPolynomial::constant(1)) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(RatPolynomial::constant(c)), den_(RatPolynomial::constant(1)) {}
  RationalFunction(RatPolynomial num, RatPolynomial den);

  static RationalFunction variable() { return {RatPolynomial{Rational(0), Rational(1)}, RatPolynomial::constant(1)}; }

  const RatPolynomial& num() const { return num_; }
  const RatPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational eval(const Rational& x) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RatPolynomial num_;
  RatPolynomial den_;
};

/// An element of Q(x) written as num/den with integer polynomials: num is
/// primitive times a rational folded into its coefficients' scale, den primitive.
struct IntegerFraction {
  IntPolynomial num;
  IntPolynomial den;
};
IntegerFraction to_integer_fraction(const RationalFunction& f);

}  // namespace etor

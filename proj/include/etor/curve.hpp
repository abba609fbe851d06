#pragma once

#include <optional>
#include <string>

#include "etor/arith.hpp"

namespace etor {

/// Y^2 = X^3 + a X + b with integer coefficients. Construction does not check
/// nonsingularity so that disc() can be asked of any pair; use make_curve()
/// where nonsingularity is required.
struct Curve {
  Integer a;
  Integer b;

  bool operator==(const Curve&) const = default;
};

Curve make_curve(const Integer& a, const Integer& b);

/// Affine rational point or the point at infinity.
class Point {
 public:
  Point() = default;  // infinity
  Point(Rational x, Rational y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

  static Point infinity() { return {}; }

  bool is_infinity() const { return !affine_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  bool is_integral() const { return !affine_ || (etor::is_integral(x_) && etor::is_integral(y_)); }

  Point operator-() const { return affine_ ? Point(x_, -y_) : Point(); }
  bool operator==(const Point& o) const {
    return affine_ == o.affine_ && (!affine_ || (x_ == o.x_ && y_ == o.y_));
  }
  /// Infinity first, then by (x, y).
  bool operator<(const Point& o) const;

  std::string to_string() const;

 private:
  bool affine_ = false;
  Rational x_;
  Rational y_;
};

/// -16(4a^3 + 27b^2).
Integer disc(const Curve& c);
inline bool is_singular(const Curve& c) { return 4 * c.a * c.a * c.a + 27 * c.b * c.b == 0; }

/// 6912 a^3 / (4a^3 + 27b^2); rejects singular curves.
Rational j_invariant(const Curve& c);

bool on_curve(const Curve& c, const Point& p);

/// Chord-tangent sum; both inputs must lie on c.
Point add(const Curve& c, const Point& p, const Point& q);
Point dbl(const Curve& c, const Point& p);

/// m * P by double-and-add, m >= 0.
Point scalar_mul(const Curve& c, const Integer& m, const Point& p);

/// Least m in [1, cap] with m P = O, if any.
std::optional<unsigned> point_order(const Curve& c, const Point& p, unsigned cap = 16);

/// Coefficients of the twist (u^4 a, u^6 b) over Q, for rational input too.
struct RationalCurve {
  Rational a;
  Rational b;
};
RationalCurve twist_coefficients(const Rational& a, const Rational& b, const Rational& u);

/// (u^4 a, u^6 b); throws when the result is not integral.
Curve twist_scale(const Curve& c, const Rational& u);

/// Image of p under (x, y) -> (u^2 x, u^3 y).
Point twist_point(const Point& p, const Rational& u);

/// Integral model (u^4 a, u^6 b) with u = lcm(den a, den b).
struct IntegralModel {
  Curve curve;
  Integer u;
};
IntegralModel integral_model(const Rational& a, const Rational& b);

}  // namespace etor

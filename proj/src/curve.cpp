#include "etor/curve.hpp"

#include "etor/errors.hpp"

namespace etor {

Curve make_curve(const Integer& a, const Integer& b) {
  Curve c{a, b};
  if (is_singular(c)) throw SingularCurve("singular curve: a=" + a.get_str() + " b=" + b.get_str());
  return c;
}

bool Point::operator<(const Point& o) const {
  if (!affine_ || !o.affine_) return !affine_ && o.affine_;
  if (x_ != o.x_) return x_ < o.x_;
  return y_ < o.y_;
}

std::string Point::to_string() const {
  if (!affine_) return "O";
  return "(" + x_.get_str() + ", " + y_.get_str() + ")";
}

Integer disc(const Curve& c) { return -16 * (4 * c.a * c.a * c.a + 27 * c.b * c.b); }

Rational j_invariant(const Curve& c) {
  Integer d = 4 * c.a * c.a * c.a + 27 * c.b * c.b;
  if (d == 0) throw SingularCurve("j-invariant of a singular curve");
  Integer n = 6912 * c.a * c.a * c.a;
  return make_rational(n, d);
}

bool on_curve(const Curve& c, const Point& p) {
  if (p.is_infinity()) return true;
  const Rational& x = p.x();
  Rational rhs = x * x * x + Rational(c.a) * x + Rational(c.b);
  return p.y() * p.y() == rhs;
}

namespace {

Point add_unchecked(const Curve& c, const Point& p, const Point& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rational slope;
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y() == 0) return Point::infinity();
    slope = (3 * p.x() * p.x() + Rational(c.a)) / (2 * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = slope * slope - p.x() - q.x();
  Rational y3 = slope * (p.x() - x3) - p.y();
  return {x3, y3};
}

void require_on_curve(const Curve& c, const Point& p) {
  if (!on_curve(c, p)) throw OffCurvePoint("point " + p.to_string() + " is not on the curve");
}

}  // namespace

Point add(const Curve& c, const Point& p, const Point& q) {
  require_on_curve(c, p);
  require_on_curve(c, q);
  return add_unchecked(c, p, q);
}

Point dbl(const Curve& c, const Point& p) { return add(c, p, p); }

Point scalar_mul(const Curve& c, const Integer& m, const Point& p) {
  if (m < 0) throw DomainError("scalar_mul: negative multiplier");
  require_on_curve(c, p);
  Point acc;
  const auto bits = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
  if (m == 0) return acc;
  for (long i = bits - 1; i >= 0; --i) {
    acc = add_unchecked(c, acc, acc);
    if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = add_unchecked(c, acc, p);
  }
  return acc;
}

std::optional<unsigned> point_order(const Curve& c, const Point& p, unsigned cap) {
  require_on_curve(c, p);
  if (p.is_infinity()) return 1U;
  Point q = p;
  for (unsigned m = 2; m <= cap; ++m) {
    q = add_unchecked(c, q, p);
    if (q.is_infinity()) return m;
  }
  return std::nullopt;
}

RationalCurve twist_coefficients(const Rational& a, const Rational& b, const Rational& u) {
  if (u == 0) throw DomainError("twist by zero");
  return {pow(u, 4) * a, pow(u, 6) * b};
}

Curve twist_scale(const Curve& c, const Rational& u) {
  RationalCurve t = twist_coefficients(Rational(c.a), Rational(c.b), u);
  if (!is_integral(t.a) || !is_integral(t.b))
    throw DomainError("twist_scale: u=" + u.get_str() + " gives non-integral coefficients");
  return {t.a.get_num(), t.b.get_num()};
}

Point twist_point(const Point& p, const Rational& u) {
  if (u == 0) throw DomainError("twist by zero");
  if (p.is_infinity()) return p;
  return {u * u * p.x(), u * u * u * p.y()};
}

IntegralModel integral_model(const Rational& a, const Rational& b) {
  Integer u = lcm(a.get_den(), b.get_den());
  RationalCurve t = twist_coefficients(a, b, Rational(u));
  return {Curve{t.a.get_num(), t.b.get_num()}, u};
}

}  // namespace etor

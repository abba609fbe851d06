#include <doctest.h>

#include "etor/torsion.hpp"
#include "support.hpp"

using namespace etor;

namespace {

const Curve kFive{-432, 8208};
const Point kP5{Rational(-12), Rational(108)};

// Integral affine points with |x| <= bound.
std::vector<Point> small_points(const Curve& c, long bound) {
  std::vector<Point> out;
  for (long x = -bound; x <= bound; ++x) {
    Integer rhs = Integer(x) * x * x + c.a * x + c.b;
    if (rhs < 0) continue;
    if (auto y = rational_square_root(Rational(rhs))) {
      out.emplace_back(Rational(x), *y);
      if (*y != 0) out.emplace_back(Rational(x), -*y);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("discriminant") {
  CHECK(disc(Curve{0, 0}) == 0);
  CHECK(is_singular(Curve{0, 0}));
  CHECK(disc(Curve{-1, 0}) == 64);
  CHECK(disc(kFive) == Integer("-23944605696"));
  CHECK_THROWS_AS(make_curve(0, 0), SingularCurve);
  CHECK_THROWS_AS(make_curve(-3, 2), SingularCurve);
  CHECK_NOTHROW(make_curve(-43, 166));
}

TEST_CASE("j-invariant") {
  CHECK(j_invariant(Curve{1, 0}) == 1728);
  CHECK(j_invariant(Curve{0, 1}) == 0);
  CHECK_THROWS_AS(j_invariant(Curve{0, 0}), SingularCurve);
  GeneratedCurve g = generate_curve({5, Integer(6), Integer(6), Rational(1)});
  CHECK(j_invariant(g.curve) == j_invariant(kFive));
}

TEST_CASE("group law basics") {
  CHECK(on_curve(kFive, kP5));
  CHECK(add(kFive, Point::infinity(), kP5) == kP5);
  CHECK(add(kFive, kP5, Point::infinity()) == kP5);
  CHECK(add(kFive, kP5, -kP5).is_infinity());
  Point p2 = dbl(kFive, kP5);
  CHECK(p2 == add(kFive, kP5, kP5));
  CHECK(p2 == Point(Rational(24), Rational(-108)));
  CHECK(scalar_mul(kFive, 5, kP5).is_infinity());
  CHECK(scalar_mul(kFive, 0, kP5).is_infinity());
  CHECK(scalar_mul(kFive, 1, kP5) == kP5);
  CHECK(scalar_mul(kFive, 7, kP5) == p2);
  CHECK_THROWS_AS(add(kFive, Point(Rational(0), Rational(1)), kP5), OffCurvePoint);
  CHECK_THROWS_AS(scalar_mul(kFive, -1, kP5), DomainError);
}

TEST_CASE("point orders") {
  CHECK(point_order(kFive, Point::infinity()) == 1U);
  CHECK(point_order(kFive, kP5) == 5U);
  CHECK(point_order(Curve{-1, 0}, Point(Rational(1), Rational(0))) == 2U);
  CHECK(point_order(Curve{-2, 4}, Point(Rational(-2), Rational(0))) == 2U);
  // (3, 5) on y^2 = x^3 - 2 has infinite order.
  CHECK_FALSE(point_order(Curve{0, -2}, Point(Rational(3), Rational(5))).has_value());
}

TEST_CASE("order-7 point on the curve of witness (2, 1)") {
  GeneratedCurve g = generate_curve({7, Integer(2), Integer(1), Rational(1)});
  REQUIRE_FALSE(g.points.empty());
  const Point& p = g.points.front();
  CHECK(scalar_mul(g.curve, 7, p).is_infinity());
  for (int k = 1; k <= 6; ++k) CHECK_FALSE(scalar_mul(g.curve, k, p).is_infinity());
}

TEST_CASE("twists") {
  CHECK(twist_scale(kFive, Rational(1)) == kFive);
  CHECK(twist_scale(kFive, Rational(6)) == Curve{1296 * kFive.a, 46656 * kFive.b});
  CHECK(twist_scale(Curve{1296, 46656}, make_rational(1, 6)) == Curve{1, 1});
  CHECK_THROWS_AS(twist_scale(Curve{1, 1}, make_rational(1, 2)), DomainError);
  CHECK(twist_point(kP5, Rational(2)) == Point(Rational(-48), Rational(864)));

  for (long u : {2, 3, 5, 6}) {
    Curve t = twist_scale(kFive, Rational(u));
    CHECK(disc(t) == pow(Integer(u), 12) * disc(kFive));
    CHECK(j_invariant(t) == j_invariant(kFive));
  }

  IntegralModel m = integral_model(make_rational(1, 4), make_rational(-1, 8));
  CHECK(m.u == 8);
  CHECK(m.curve == Curve{1024, -32768});
}

TEST_CASE("twist maps preserve point order") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int n : thue_orders()) {
    for (const Witness& w : testing::witness_grid(n, 2)) {
      GeneratedCurve g = generate_curve(w);
      for (const Point& p : g.points) {
        if (checked >= 50) break;
        Rational u = testing::random_rational(rng, 9);
        if (u == 0) u = 7;
        RationalCurve tc = twist_coefficients(Rational(g.curve.a), Rational(g.curve.b), u);
        IntegralModel im = integral_model(tc.a, tc.b);
        Point image = twist_point(twist_point(p, u), Rational(im.u));
        REQUIRE(on_curve(im.curve, image));
        CHECK(point_order(im.curve, image) == point_order(g.curve, p));
        ++checked;
      }
    }
  }
  CHECK(checked == 50);
}

TEST_CASE("associativity on generated curves") {
  std::mt19937_64 rng(3);
  int curves = 0, triples = 0;
  for (int n : thue_orders()) {
    for (const Witness& w : testing::witness_grid(n, 2)) {
      if (curves == 10) break;
      GeneratedCurve g = generate_curve(w);
      std::vector<Point> pool = torsion_points(g.curve);
      for (const Point& p : small_points(g.curve, 2000)) pool.push_back(p);
      if (pool.size() < 3) continue;
      ++curves;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (int t = 0; t < 10; ++t) {
        const Point& a = pool[pick(rng)];
        const Point& b = pool[pick(rng)];
        const Point& c = pool[pick(rng)];
        CHECK(add(g.curve, add(g.curve, a, b), c) == add(g.curve, a, add(g.curve, b, c)));
        ++triples;
      }
    }
  }
  CHECK(curves == 10);
  CHECK(triples == 100);
}

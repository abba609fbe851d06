#include <doctest.h>

#include <algorithm>
#include <set>

#include "etor/torsion.hpp"
#include "support.hpp"

using namespace etor;

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

bool contains(const std::vector<Point>& v, const Point& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

}  // namespace

TEST_CASE("hand curves") {
  std::vector<Point> t10 = torsion_points(Curve{1, 0});
  CHECK(t10 == std::vector<Point>{Point::infinity(), pt(0, 0)});
  CHECK(torsion_structure(Curve{1, 0}).label() == "Z/2Z");

  std::vector<Point> t01 = torsion_points(Curve{0, 1});
  CHECK(t01.size() == 6);
  for (const Point& p : {pt(2, 3), pt(0, 1), pt(0, -1), pt(-1, 0)}) CHECK(contains(t01, p));
  CHECK(torsion_structure(Curve{0, 1}).label() == "Z/6Z");

  TorsionReport r = torsion_structure(Curve{-43, 166});
  CHECK(r.points.size() == 7);
  CHECK(r.label() == "Z/7Z");

  CHECK(torsion_structure(Curve{-1, 0}).label() == "Z/2Z x Z/2Z");
  CHECK(torsion_structure(Curve{0, -2}).label() == "Z/1Z");
}

TEST_CASE("generated curves") {
  GeneratedCurve g9 = generate_curve({9, Integer(2), Integer(1), Rational(1)});
  CHECK(torsion_structure(g9.curve).label() == "Z/9Z");
  GeneratedCurve g5 = generate_curve({5, Integer(1), Integer(1), Rational(1)});
  CHECK(torsion_structure(g5.curve).label() == "Z/5Z");
  GeneratedCurve g8 = generate_curve({8, Integer(3), Integer(1), Rational(1)});
  TorsionReport r8 = torsion_structure(g8.curve);
  CHECK(r8.group.exponent() % 8 == 0);
}

TEST_CASE("has_point_of_order") {
  CHECK(has_point_of_order(Curve{-43, 166}, 1));
  CHECK(has_point_of_order(Curve{-43, 166}, 7));
  CHECK_FALSE(has_point_of_order(Curve{-43, 166}, 5));
  CHECK(has_point_of_order(Curve{0, 1}, 3));
  CHECK(has_point_of_order(Curve{0, 1}, 2));
  CHECK_FALSE(has_point_of_order(Curve{0, 1}, 4));
  CHECK_THROWS_AS(has_point_of_order(Curve{0, 0}, 2), SingularCurve);
}

TEST_CASE("integer roots of depressed cubics") {
  CHECK(integer_roots_depressed_cubic(-1, 0) == std::vector<Integer>{-1, 0, 1});
  CHECK(integer_roots_depressed_cubic(1, 0) == std::vector<Integer>{0});
  CHECK(integer_roots_depressed_cubic(0, 1) == std::vector<Integer>{-1});
  CHECK(integer_roots_depressed_cubic(-7, 6) == std::vector<Integer>{-3, 1, 2});
  CHECK(integer_roots_depressed_cubic(-43, 166).empty());
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-300, 300);
  for (int i = 0; i < 300; ++i) {
    long r1 = d(rng), r2 = d(rng);
    long r3 = -r1 - r2;
    Integer a = Integer(r1) * r2 + Integer(r1) * r3 + Integer(r2) * r3;
    Integer b = -Integer(r1) * r2 * r3;
    std::set<Integer> want{Integer(r1), Integer(r2), Integer(r3)};
    std::vector<Integer> got = integer_roots_depressed_cubic(a, b);
    CHECK(std::set<Integer>(got.begin(), got.end()) == want);
  }
}

TEST_CASE("oracle is a closed subgroup of integral points and misses none nearby") {
  for (long a = -12; a <= 12; ++a) {
    for (long b = -12; b <= 12; ++b) {
      Curve c{a, b};
      if (is_singular(c)) continue;
      std::vector<Point> t = torsion_points(c);
      REQUIRE(is_mazur_group(torsion_structure(c).group));
      for (const Point& p : t) {
        CHECK(p.is_integral());
        CHECK(on_curve(c, p));
        for (const Point& q : t) CHECK(contains(t, add(c, p, q)));
      }
      for (long x = -40; x <= 40; ++x) {
        Integer rhs = Integer(x) * x * x + a * x + b;
        if (rhs < 0) continue;
        auto y = rational_square_root(Rational(rhs));
        if (!y) continue;
        Point p{Rational(x), *y};
        CHECK(point_order(c, p, 12).has_value() == contains(t, p));
      }
    }
  }
}

TEST_CASE("trial limit too small for the discriminant") {
  // 16 (4 + 27 * 1000003^2) = 2^4 * 67 * 877 * 459506833.
  Curve c{1, 1000003};
  CHECK_THROWS_AS(torsion_points(c, 100), OracleUnavailable);
}

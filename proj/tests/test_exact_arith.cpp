#include <doctest.h>

#include <algorithm>
#include <random>

#include "etor/bipoly.hpp"
#include "etor/polynomial.hpp"

using namespace etor;

namespace {

std::vector<std::pair<Integer, unsigned>> pairs(const Factorization& f) {
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& pp : f.factors) out.emplace_back(pp.prime, pp.exponent);
  return out;
}

Integer random_integer(std::mt19937_64& rng, unsigned bits) {
  Integer out = 0;
  for (unsigned i = 0; i < bits; i += 32) out = out * 4294967296UL + static_cast<unsigned long>(rng() & 0xffffffffU);
  Integer mask = pow(Integer(2), bits) - 1;
  return out & mask;
}

}  // namespace

TEST_CASE("factorize small values") {
  Factorization f12 = factorize(12);
  CHECK(pairs(f12) == std::vector<std::pair<Integer, unsigned>>{{2, 2}, {3, 1}});
  CHECK(f12.cofactor == 1);

  Factorization f1 = factorize(1);
  CHECK(f1.factors.empty());
  CHECK(f1.complete());

  Factorization fd = factorize(Integer("23944605696"));
  CHECK(pairs(fd) == std::vector<std::pair<Integer, unsigned>>{{2, 12}, {3, 12}, {11, 1}});
  CHECK(fd.complete());

  Factorization neg = factorize(-90);
  CHECK(neg.sign == -1);
  CHECK(neg.product() == -90);

  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("factorize reports what trial division could not finish") {
  // 1000003 * 1000033, both prime and past the limit.
  Integer semi = Integer(1000003) * Integer(1000033);
  Factorization f = factorize(semi, 1000);
  CHECK_FALSE(f.complete());
  CHECK(f.cofactor == semi);
  CHECK_THROWS_AS(divisors(f), FactorizationIncomplete);

  // A prime tail certified by d*d > remainder counts as complete.
  Factorization g = factorize(Integer(2 * 1000003), 1000000);
  CHECK(g.complete());
  CHECK(pairs(g) == std::vector<std::pair<Integer, unsigned>>{{2, 1}, {1000003, 1}});
}

TEST_CASE("factorize round-trips on random inputs") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    Integer m = random_integer(rng, 24 + static_cast<unsigned>(i % 60));
    if (m == 0) m = 1;
    if (i % 3 == 0) m = -m;
    Factorization f = factorize(m, 20000);
    REQUIRE(f.product() == m);
    for (const auto& pp : f.factors) CHECK(mpz_probab_prime_p(pp.prime.get_mpz_t(), 30) > 0);
    for (std::size_t j = 1; j < f.factors.size(); ++j) CHECK(f.factors[j - 1].prime < f.factors[j].prime);
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(factorize(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(factorize(1)) == std::vector<Integer>{1});
  CHECK(divisors(factorize(Integer("23944605696"))).size() == 13 * 13 * 2);
}

TEST_CASE("rational roots of perfect powers") {
  CHECK(rational_square_root(make_rational(9, 4)) == make_rational(3, 2));
  CHECK_FALSE(rational_square_root(Rational(2)).has_value());
  CHECK(rational_square_root(Rational(11664)) == Rational(108));
  CHECK_FALSE(rational_square_root(Rational(-4)).has_value());
  CHECK(rational_nth_root(make_rational(-8, 27), 3) == make_rational(-2, 3));
  CHECK(rational_nth_root(Rational(81), 4) == Rational(3));
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("17") == 17);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("binomial") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(3, 3) == 1);
}

TEST_CASE("polynomial parsing and arithmetic") {
  IntPolynomial f = parse_int_polynomial("54+972a-4050a^2", 'a');
  CHECK(f.coeffs() == std::vector<Integer>{54, 972, -4050});
  CHECK(f.eval(Integer(1)) == 54 + 972 - 4050);
  IntPolynomial g = parse_int_polynomial("a - 1", 'a');
  CHECK((f * g).degree() == 3);
  CHECK((f - f).is_zero());
  CHECK(g.pow(3) == parse_int_polynomial("a^3-3a^2+3a-1", 'a'));
  CHECK_THROWS_AS(parse_int_polynomial("", 'a'), DomainError);
  CHECK_THROWS_AS(parse_int_polynomial("3b", 'a'), DomainError);
}

TEST_CASE("rational_roots small cases") {
  CHECK(rational_roots(parse_int_polynomial("x^2-1", 'x')) == std::vector<Rational>{-1, 1});
  CHECK(rational_roots(parse_int_polynomial("2x-3", 'x')) == std::vector<Rational>{make_rational(3, 2)});
  CHECK(rational_roots(parse_int_polynomial("x^3", 'x')) == std::vector<Rational>{0});
  CHECK(rational_roots(parse_int_polynomial("x^2+1", 'x')).empty());
  CHECK(rational_roots(parse_int_polynomial("6x^3-x^2-x", 'x')) ==
        std::vector<Rational>{make_rational(-1, 3), 0, make_rational(1, 2)});
  CHECK_THROWS_AS(rational_roots(IntPolynomial()), DomainError);
}

TEST_CASE("rational_roots recovers planted roots") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 40), extra(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> planted;
    IntPolynomial f = IntPolynomial::constant(1);
    int roots = 1 + trial % 4;
    for (int i = 0; i < roots; ++i) {
      Rational r = make_rational(Integer(num(rng)), Integer(den(rng)));
      planted.push_back(r);
      f = f * IntPolynomial{-r.get_num(), r.get_den()};
    }
    // An irreducible-over-Q quadratic factor contributes no roots.
    f = f * IntPolynomial{Integer(2 + trial % 7), Integer(0), Integer(1)};
    f = Integer(extra(rng) == 0 ? 1 : extra(rng)) * f;
    if (f.is_zero()) continue;
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    CHECK(rational_roots(f) == planted);
  }
}

TEST_CASE("polynomial gcd and rational functions") {
  RatPolynomial a = to_rational(parse_int_polynomial("x^2-1", 'x'));
  RatPolynomial b = to_rational(parse_int_polynomial("2x-2", 'x'));
  CHECK(gcd(a, b) == to_rational(parse_int_polynomial("x-1", 'x')));

  RationalFunction f(a, to_rational(parse_int_polynomial("x-1", 'x')));
  CHECK(f.den() == RatPolynomial::constant(1));
  CHECK(f.num() == to_rational(parse_int_polynomial("x+1", 'x')));

  RationalFunction x = RationalFunction::variable();
  RationalFunction h = (x * x + RationalFunction(1)) / (x - RationalFunction(2));
  CHECK(h.eval(Rational(4)) == make_rational(17, 2));
  CHECK_THROWS_AS(h.eval(Rational(2)), DomainError);
  CHECK((h - h).is_zero());
  CHECK(h * (x - RationalFunction(2)) == x * x + RationalFunction(1));

  IntegerFraction fr = to_integer_fraction(RationalFunction(make_rational(1, 2)) / x);
  CHECK(fr.num == IntPolynomial{Integer(1)});
  CHECK(fr.den == IntPolynomial{Integer(0), Integer(2)});
}

TEST_CASE("bivariate forms") {
  BiPoly u = BiPoly::parse("q^4-12q^3p+14q^2p^2+12p^3q+p^4");
  CHECK(u.is_homogeneous());
  CHECK(u.total_degree() == 4);
  CHECK(u.eval(Integer(1), Integer(1)) == 16);
  CHECK(u.coeff(1, 3) == -12);
  CHECK(u.eval(make_rational(1, 2), Rational(1)) * 16 == u.eval(Integer(1), Integer(2)));

  BiPoly xy = BiPoly::parse("x^3y^2+x", 'x', 'y');
  CHECK(xy.contract(1, 2) == BiPoly::parse("x^3y+x", 'x', 'y'));
  CHECK_FALSE(xy.is_homogeneous());
  CHECK((BiPoly::parse("p+q").pow(2)) == BiPoly::parse("p^2+2pq+q^2"));
  CHECK(BiPoly::parse("p-q") * BiPoly::parse("p+q") == BiPoly::parse("p^2-q^2"));
}

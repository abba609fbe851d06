#include "etor/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace etor {

template <class Coeff>
std::string Polynomial<Coeff>::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Coeff& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Coeff mag = abs(c);
    if (c < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

template class Polynomial<Integer>;
template class Polynomial<Rational>;

IntPolynomial parse_int_polynomial(std::string_view text, char var) {
  std::vector<Integer> coeffs;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  skip_ws();
  if (i == text.size()) throw DomainError("empty polynomial text");
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    std::string digits = read_uint();
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    std::size_t e = 0;
    skip_ws();
    if (i < text.size() && text[i] == var) {
      ++i;
      e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string ed = read_uint();
        if (ed.empty()) throw DomainError("missing exponent in polynomial text");
        e = std::stoul(ed);
      }
    } else if (digits.empty()) {
      throw DomainError("malformed polynomial term near offset " + std::to_string(i));
    }
    if (coeffs.size() <= e) coeffs.resize(e + 1, Integer(0));
    coeffs[e] += sign * c;
    skip_ws();
  }
  return IntPolynomial(std::move(coeffs));
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, c);
  return g;
}

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

std::pair<Rational, IntPolynomial> primitive_part(const RatPolynomial& f) {
  if (f.is_zero()) return {Rational(0), IntPolynomial()};
  Integer den_lcm = 1;
  for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
  std::vector<Integer> ints;
  ints.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    Rational scaled = c * den_lcm;
    ints.push_back(scaled.get_num());
  }
  IntPolynomial g(std::move(ints));
  Integer cont = content(g);
  if (g.leading() < 0) cont = -cont;
  std::vector<Integer> reduced;
  for (const auto& c : g.coeffs()) reduced.push_back(c / cont);
  return {make_rational(cont, den_lcm), IntPolynomial(std::move(reduced))};
}

namespace {

// Homogeneous evaluation sum c_i r^i s^(d-i), i.e. s^d f(r/s).
Integer eval_homogeneous(const std::vector<Integer>& c, const Integer& r, const std::vector<Integer>& s_pow) {
  const std::size_t d = c.size() - 1;
  Integer acc = c[d];
  for (std::size_t i = d; i-- > 0;) {
    acc *= r;
    acc += c[i] * s_pow[d - i];
  }
  return acc;
}

// Cauchy bound 1 + max |c_i / c_d| on root magnitude.
Rational cauchy_bound(const std::vector<Integer>& c) {
  Integer m = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, Integer(abs(c[i])));
  return 1 + make_rational(m, abs(c.back()));
}

}  // namespace

std::vector<Rational> rational_roots(const IntPolynomial& f, std::uint64_t trial_limit) {
  if (f.is_zero()) throw DomainError("rational_roots: zero polynomial");
  std::vector<Rational> roots;

  std::size_t v = 0;
  while (f.coeffs()[v] == 0) ++v;
  if (v > 0) roots.emplace_back(0);
  std::vector<Integer> c(f.coeffs().begin() + static_cast<long>(v), f.coeffs().end());
  Integer g = 0;
  for (const auto& x : c) g = gcd(g, x);
  for (auto& x : c) x /= g;
  if (c.size() == 1) return roots;

  Factorization fc = factorize(c.front(), trial_limit);
  Factorization fl = factorize(c.back(), trial_limit);
  if (!fc.complete() || !fl.complete())
    throw FactorizationIncomplete("rational_roots: end coefficient not factorable within trial limit");
  const std::vector<Integer> nums = divisors(fc);
  const std::vector<Integer> dens = divisors(fl);

  const std::size_t d = c.size() - 1;
  const Rational bound = cauchy_bound(c);
  // Gauss: a root r/s makes (s*m - r) divide f(m) for every integer m.
  Integer f1 = 0, fm1 = 0, f2 = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    f1 += c[i];
    fm1 += (i % 2 == 0) ? c[i] : Integer(-c[i]);
    f2 += c[i] * pow(Integer(2), i);
  }

  std::vector<Integer> s_pow(d + 1);
  for (const auto& s : dens) {
    s_pow[0] = 1;
    for (std::size_t i = 1; i <= d; ++i) s_pow[i] = s_pow[i - 1] * s;
    const Rational limit = bound * s;
    for (const auto& r_abs : nums) {
      if (r_abs > limit) break;
      if (gcd(r_abs, s) != 1) continue;
      for (int sign : {1, -1}) {
        Integer r = sign * r_abs;
        Integer t = s - r;
        if (!mpz_divisible_p(f1.get_mpz_t(), t.get_mpz_t())) continue;
        t = -s - r;
        if (!mpz_divisible_p(fm1.get_mpz_t(), t.get_mpz_t())) continue;
        t = 2 * s - r;
        if (!mpz_divisible_p(f2.get_mpz_t(), t.get_mpz_t())) continue;
        if (eval_homogeneous(c, r, s_pow) == 0) roots.push_back(make_rational(r, s));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {RatPolynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational& lead = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] / lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv = 1 / a.leading();
  return inv * a;
}

RationalFunction::RationalFunction(RatPolynomial num, RatPolynomial den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = RatPolynomial();
    den_ = RatPolynomial::constant(1);
    return;
  }
  RatPolynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  Rational inv = 1 / den.leading();
  num_ = inv * num;
  den_ = inv * den;
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  Rational n = num_.eval(x);
  return n / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("rational function division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

IntegerFraction to_integer_fraction(const RationalFunction& f) {
  auto [sn, pn] = primitive_part(f.num());
  auto [sd, pd] = primitive_part(f.den());
  Rational scale = sn / sd;
  IntPolynomial num = Integer(scale.get_num()) * pn;
  IntPolynomial den = Integer(scale.get_den()) * pd;
  return {num, den};
}

}  // namespace etor

#include "etor/arith.hpp"

#include <algorithm>
#include <limits>

#include "etor/errors.hpp"

namespace etor {

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  auto e = static_cast<unsigned long>(exponent);
  return make_rational(pow(base.get_num(), e), pow(base.get_den(), e));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::optional<Rational> rational_square_root(const Rational& x) { return rational_nth_root(x, 2); }

std::optional<Rational> rational_nth_root(const Rational& x, unsigned long degree) {
  if (degree == 0) throw DomainError("root of degree 0");
  if (x < 0 && degree % 2 == 0) return std::nullopt;
  Integer num = abs(x.get_num());
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), degree) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), x.get_den().get_mpz_t(), degree) == 0) return std::nullopt;
  if (x < 0) rn = -rn;
  return make_rational(rn, rd);
}

Integer Factorization::product() const {
  Integer out = sign;
  for (const auto& pp : factors) out *= pow(pp.prime, pp.exponent);
  return out * cofactor;
}

namespace {

// Trial division on a remainder that fits in 64 bits; `d` is the next
// candidate divisor (odd, >= 3).
void factor_small(std::uint64_t n, std::uint64_t d, std::uint64_t limit, Factorization& f) {
  for (; d <= limit && d <= n / d; d += 2) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.factors.push_back({Integer(static_cast<unsigned long>(d)), e});
  }
  if (n == 1) return;
  if (d > n / d) {
    f.factors.push_back({Integer(static_cast<unsigned long>(n)), 1});
  } else {
    f.cofactor = Integer(static_cast<unsigned long>(n));
  }
}

}  // namespace

Factorization factorize(const Integer& m, std::uint64_t trial_limit) {
  if (m == 0) throw DomainError("factorize: zero has no factorization");
  if (trial_limit < 2) throw DomainError("factorize: trial limit must be at least 2");
  Factorization f;
  f.sign = sgn(m) < 0 ? -1 : 1;
  Integer n = abs(m);

  unsigned twos = static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
  if (twos > 0) {
    mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), twos);
    f.factors.push_back({Integer(2), twos});
  }

  std::uint64_t d = 3;
  while (n > 1 && !n.fits_ulong_p()) {
    if (d > trial_limit) {
      f.cofactor = n;
      return f;
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      f.factors.push_back({Integer(static_cast<unsigned long>(d)), e});
    }
    d += 2;
  }
  if (n > 1) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    factor_small(n.get_ui(), d, trial_limit, f);
  }
  return f;
}

std::vector<Integer> divisors(const Factorization& f) {
  if (!f.complete()) throw FactorizationIncomplete("divisors: factorization has an unfactored cofactor");
  std::vector<Integer> out{Integer(1)};
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    Integer power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  if (!out.fits_ulong_p()) throw DomainError("binomial coefficient overflows");
  return out.get_ui();
}

}  // namespace etor

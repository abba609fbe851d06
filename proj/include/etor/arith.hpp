#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace etor {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::uint64_t kDefaultTrialLimit = 1'000'000;

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// Nonnegative r with r*r == x, when x is the square of a rational.
std::optional<Rational> rational_square_root(const Rational& x);

/// r with r^degree == x (r >= 0 for even degree), when one exists.
std::optional<Rational> rational_nth_root(const Rational& x, unsigned long degree);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Result of trial division: sign * prod(p^e) * cofactor == input.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // ascending primes
  Integer cofactor = 1;             // 1 when complete

  bool complete() const { return cofactor == 1; }
  Integer product() const;
};

/// Deterministic trial division by candidates <= trial_limit. A remainder that
/// trial division has certified prime (d*d > remainder) is reported as a prime
/// even above the limit; anything else left over stays in the cofactor.
Factorization factorize(const Integer& m, std::uint64_t trial_limit = kDefaultTrialLimit);

/// All positive divisors of prod(p^e); requires a complete factorization.
std::vector<Integer> divisors(const Factorization& f);

unsigned long binomial(unsigned long n, unsigned long k);

}  // namespace etor

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "etor/arith.hpp"
#include "etor/bipoly.hpp"

namespace etor {

/// Substitution v^power -> v applied before reading off the Thue degree.
struct DegreeReduction {
  int variable = 0;  // 0 = x, 1 = y
  unsigned power = 1;
  std::string tag() const;
};

/// Tabulated discriminant Delta_n(x, y) of the two-parameter families.
struct DiscFormula {
  int n = 0;
  BiPoly poly;  // exponents are (x, y)
  int table_degree = 0;
  std::optional<DegreeReduction> reduction;

  /// poly after the reduction substitution (poly itself when there is none).
  BiPoly reduced() const;
};

const DiscFormula& disc_formula(int n);
Integer disc_poly(int n, const Integer& x, const Integer& y);

/// 7^(15 (C(r,3)+1)^2) + 6 * 7^(2 C(r,3) (t+1)): bound on primitive solutions
/// of a degree-r Thue equation whose right side has t prime factors.
Integer evertse_bound(unsigned r, unsigned t);

struct CountBound {
  int n = 0;
  unsigned t = 0;
  Integer value;
};

/// Closed-form M_n(t) for the Mazur orders n in {2..10, 12}.
CountBound mazur_count_bound(int n, unsigned t);

/// Thue degree r with mazur_count_bound(n, t) == evertse_bound(r, t).
unsigned count_bound_thue_degree(int n);

/// Number of distinct primes of delta; throws FactorizationIncomplete when
/// trial division cannot finish.
unsigned prime_factor_count(const Integer& delta, std::uint64_t trial_limit = kDefaultTrialLimit);

}  // namespace etor

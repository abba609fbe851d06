#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "etor/thue.hpp"

namespace etor::testing {

inline Rational random_rational(std::mt19937_64& rng, long span = 50) {
  std::uniform_int_distribution<long> dist(-span, span);
  long d = 0;
  while (d == 0) d = dist(rng);
  return make_rational(Integer(dist(rng)), Integer(d));
}

/// Every valid witness with 1 <= |p|, |q| <= bound, gcd(p, q) = 1, in every
/// k of the family's k-set, that generates a nonsingular curve.
inline std::vector<Witness> witness_grid(int n, long bound) {
  const ThueFamily& fam = thue_family(n);
  std::vector<Witness> out;
  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q) {
      if (p == 0 || q == 0 || std::gcd(p, q) != 1) continue;
      if (!fam.side_conditions_hold(Integer(p), Integer(q))) continue;
      for (const auto& k : fam.kset) {
        Witness w{n, Integer(p), Integer(q), k};
        try {
          generate_curve(w);
        } catch (const DegenerateWitness&) {
          continue;
        }
        out.push_back(w);
      }
    }
  return out;
}

}  // namespace etor::testing

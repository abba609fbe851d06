#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etor/curve.hpp"
#include "etor/families.hpp"
#include "etor/polynomial.hpp"
#include "etor/tate.hpp"

namespace etor {

/// (n, p, q, k) with A = -27 k^4 U_n(p,q), B = +-54 k^6 V_n(p,q).
struct Witness {
  int n = 0;
  Integer p;
  Integer q;
  Rational k = 1;

  bool operator==(const Witness&) const = default;
  std::string to_string() const;
};

class WitnessError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Witness satisfies its side conditions but the curve it names is singular.
class DegenerateWitness : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

/// Throws WitnessError on bad n, side-condition violation or k outside the kset.
void validate_witness(const Witness& w);

ShortAB<Rational> eval_AB(const Witness& w);

/// (6^4 A, 6^6 B): the 6-scaled right-hand sides, integral for k in kset.
struct FormValues {
  Integer f;
  Integer g;
  bool operator==(const FormValues&) const = default;
};
FormValues eval_FG(const Witness& w);

/// The tabulated order-n points on (A, B) = eval_AB(w), as +-P pairs. Every
/// point is checked on-curve and of exact order n; failure is a TranscriptionError.
std::vector<Point> order_n_points(const Witness& w);

struct GeneratedCurve {
  Witness witness;
  Curve curve;
  /// eval_AB was not integral, so curve is (6^4 A, 6^6 B) and points are
  /// mapped by (x, y) -> (36 x, 216 y).
  bool six_twist = false;
  std::vector<Point> points;
  Integer delta;
};
GeneratedCurve generate_curve(const Witness& w);

/// B^2 numA^3 denB^2 - A^3 numB^2 denA^3 for A_n = numA/denA, B_n = numB/denB:
/// rational roots are the alpha with j(A_n(alpha), B_n(alpha)) = j(c).
IntPolynomial matching_polynomial(const Curve& c, int n);

/// One rational alpha matching the curve: u^4 A = A_n(alpha), u^6 B = B_n(alpha).
struct DetectionBranch {
  Rational alpha;
  Rational u;
  /// |1 / (lambda u)|, the total k of the reduced (p0, q0).
  Rational k_total;
  /// Denominator of k_total.
  Integer u2;
  Integer p0;
  Integer q0;
  /// Set when k_total = k0 * s^e with k0 in kset; then witness = (s p0, s q0, k0).
  std::optional<Witness> witness;
  Integer scale = 1;
};

struct DetectionTrace {
  Rational alpha;
  Rational u;
  Integer u2;
  Rational k_total;
  std::optional<Witness> witness;
  Integer scale = 1;
  /// No branch yields a witness that validates against the 6-scaled system.
  bool discrepancy = false;
  bool via_oracle_fallback = false;
  std::vector<DetectionBranch> branches;
  std::string note;
};

/// Present iff c has a rational point of order n (n in {5, 7, 8, 9}).
std::optional<DetectionTrace> detect(const Curve& c, int n, std::uint64_t trial_limit = kDefaultTrialLimit);

/// All (p, q, k) with |p|, |q| <= bound and eval_FG = (6^4 A, 6^6 B), by
/// exhaustive scan. Empty `ks` means the family kset.
std::vector<Witness> brute_force_witness_search(const Curve& c, int n, long bound, const std::vector<Rational>& ks = {});

/// Values and identities from recomputing A, B through the intermediate
/// quasi-homogeneous parametrizations at (u, alpha).
struct IdentityCheck {
  std::string name;
  bool holds = false;
  /// false for the known-wrong transcription variants, reported but not enforced.
  bool enforced = true;
};

struct CrossCheckRecord {
  int n = 0;
  Rational u;
  Rational alpha;
  std::vector<std::pair<std::string, Rational>> values;
  std::vector<IdentityCheck> checks;
};

/// Throws TranscriptionError naming the first enforced identity that fails.
CrossCheckRecord param_cross_check(int n, const Rational& u, const Rational& alpha);

/// Checks -27 U = lambda^4 A_n(s p/q) and b_sign 54 V = lambda^6 B_n(s p/q).
bool homogenization_holds(int n, int s, const Integer& p, const Integer& q);

/// The sign s in {+1, -1} for which homogenization_holds at `samples`
/// pseudo-random points, or 0 if neither sign does.
int find_sign_map(int n, int samples = 50, unsigned seed = 1);

}  // namespace etor

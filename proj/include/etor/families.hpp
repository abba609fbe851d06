#pragma once

#include <string>
#include <vector>

#include "etor/arith.hpp"
#include "etor/bipoly.hpp"

namespace etor {

/// Degrees of F_n, G_n and of the point coordinates, in (p, q).
struct FamilyDegrees {
  int f = 0;
  int g = 0;
  int x = 0;
  int y = 0;
  bool operator==(const FamilyDegrees&) const = default;
};

/// Binary-form family for one order n in {5, 7, 8, 9}:
///   A = -27 k^4 U(p,q),  B = b_sign * 54 k^6 V(p,q),
/// with order-n points (3 k^2 X_i(p,q), +-108 k^3 Y_i(p,q)).
///
/// The short Tate model at alpha = sigma * p/q relates to it by
/// -27 U = lambda^4 A_n(alpha) and b_sign * 54 V = lambda^6 B_n(alpha), where
/// lambda = q^e (n = 5, 7, 9 with e = 1, 2, 3) or lambda = p q (n = 8).
struct ThueFamily {
  int n = 0;
  std::vector<Rational> kset;
  BiPoly u_form;
  BiPoly v_form;
  int b_sign = 1;
  std::vector<BiPoly> point_x;
  std::vector<BiPoly> point_y;
  FamilyDegrees table_degrees;
  int sigma = 1;
  /// Rescaling (p, q) -> (s p, s q) multiplies k by s^k_exponent.
  unsigned k_exponent = 1;

  FamilyDegrees formal_degrees() const;
  Integer lambda(const Integer& p, const Integer& q) const;
  bool side_conditions_hold(const Integer& p, const Integer& q) const;
  std::string side_conditions() const;
  bool in_kset(const Rational& k) const;
};

const std::vector<int>& thue_orders();
bool is_thue_order(int n);
const ThueFamily& thue_family(int n);

}  // namespace etor

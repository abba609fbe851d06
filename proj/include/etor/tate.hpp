#pragma once

#include <vector>

#include "etor/arith.hpp"
#include "etor/curve.hpp"
#include "etor/errors.hpp"
#include "etor/polynomial.hpp"

namespace etor {

/// Orders for which the Tate normal form Y^2 + (1-c)XY - bY = X^3 - bX^2 is
/// parametrized: 4..10 and 12.
bool is_tate_order(int n);
const std::vector<int>& tate_orders();

template <class F>
struct TateBC {
  F b;
  F c;
};

template <class F>
struct LongWeierstrass {
  F a1, a2, a3, a4, a6;
};

template <class F>
struct ShortAB {
  F a;
  F b;
};

/// b(alpha), c(alpha) of the Tate normal form carrying a point of order n at
/// the origin. Generic over the field so the same code runs on rationals and
/// on Q(alpha); denominator checks are the caller's business here.
template <class F>
TateBC<F> tate_bc_generic(int n, const F& al) {
  const F one(1);
  switch (n) {
    case 4:
      return {al, F(0)};
    case 5:
      return {al, al};
    case 6:
      return {al + al * al, al};
    case 7:
      return {al * al * al - al * al, al * al - al};
    case 8: {
      F b = (F(2) * al - one) * (al - one);
      return {b, b / al};
    }
    case 9: {
      F c = al * al * (al - one);
      return {c * (al * (al - one) + one), c};
    }
    case 10: {
      F d = al - (al - one) * (al - one);
      F c = (F(2) * al * al * al - F(3) * al * al + al) / d;
      return {c * al * al / d, c};
    }
    case 12: {
      F am1 = al - one;
      F c = (F(3) * al * al - F(3) * al + one) * (al - F(2) * al * al) / (am1 * am1 * am1);
      return {c * (F(2) * al - F(2) * al * al - one) / am1, c};
    }
    default:
      throw DomainError("no Tate normal form for order " + std::to_string(n));
  }
}

template <class F>
LongWeierstrass<F> tate_long_form(const TateBC<F>& bc) {
  return {F(1) - bc.c, F(0) - bc.b, F(0) - bc.b, F(0), F(0)};
}

/// Completes square and cube into Y^2 = X^3 - 27 c4 X - 54 c6, which is the
/// u = 6 scaling of the conventional short model.
template <class F>
ShortAB<F> long_to_short_generic(const LongWeierstrass<F>& w) {
  F b2 = w.a1 * w.a1 + F(4) * w.a2;
  F b4 = F(2) * w.a4 + w.a1 * w.a3;
  F b6 = w.a3 * w.a3 + F(4) * w.a6;
  F c4 = b2 * b2 - F(24) * b4;
  F c6 = F(36) * b2 * b4 - b2 * b2 * b2 - F(216) * b6;
  return {F(-27) * c4, F(-54) * c6};
}

struct TateParameter {
  int n = 0;
  Rational alpha;
};

/// Rejects n outside the Tate orders and alpha where b or c has a pole.
TateBC<Rational> tate_bc(int n, const Rational& alpha);
ShortAB<Rational> long_to_short(const LongWeierstrass<Rational>& w);

/// Short model of the Tate curve; rejects poles and alpha where the curve degenerates.
ShortAB<Rational> tate_AB(int n, const Rational& alpha);

/// Image of the Tate-form origin, the distinguished point of order n, on the
/// model returned by tate_AB: (X, Y) = (36x + 3 b2, 108 (2y + a1 x + a3)).
Point tate_origin_image(int n, const Rational& alpha);

/// A_n, B_n as elements of Q(alpha), from the same pipeline run symbolically.
const ShortAB<RationalFunction>& tate_AB_symbolic(int n);

}  // namespace etor

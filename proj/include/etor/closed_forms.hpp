#pragma once

#include "etor/polynomial.hpp"
#include "etor/tate.hpp"

namespace etor {

/// Transcribed closed forms of the short Tate model for n in {5,7,8,9}:
/// A_n(alpha) = a_num(alpha) / alpha^a_pole, likewise for B_n.
struct ClosedFormAB {
  int n = 0;
  IntPolynomial a_num;
  unsigned a_pole = 0;
  IntPolynomial b_num;
  unsigned b_pole = 0;

  ShortAB<Rational> eval(const Rational& alpha) const;
};

const ClosedFormAB& closed_form_AB(int n);

}  // namespace etor

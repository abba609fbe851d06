#include "etor/closed_forms.hpp"

namespace etor {

namespace {

constexpr char kVar = 'a';

IntPolynomial P(const char* text) { return parse_int_polynomial(text, kVar); }

ClosedFormAB build(int n) {
  switch (n) {
    case 5:
      return {5, P("-27-324a-378a^2+324a^3-27a^4"), 0, P("54+972a+4050a^2+4050a^4-972a^5+54a^6"), 0};
    case 7:
      return {7, Integer(-27) * P("a^2-a+1") * P("a^6-11a^5+30a^4-15a^3-10a^2+5a+1"), 0,
              P("54+324a-810a^2-2484a^3+9396a^4-11988a^5+14742a^6"
                "-26244a^7+30780a^8-19116a^9+6318a^10-972a^11+54a^12"),
              0};
    case 8:
      // The alpha^10 coefficient of the B numerator is zero.
      return {8, Integer(-27) * P("16a^8-64a^7+224a^6-448a^5+480a^4-288a^3+96a^2-16a+1"), 4,
              Integer(-54) * P("64a^12-384a^11+3520a^9-10296a^8+15840a^7"
                               "-15568a^6+10272a^5-4560a^4+1328a^3-240a^2+24a-1"),
              6};
    case 9:
      return {9,
              P("-27a^12+324a^11-1458a^10+3456a^9-5103a^8+4860a^7-3078a^6+972a^5+486a^4-756a^3+324a^2-27"), 0,
              P("54a^18-972a^17+7290a^16-30780a^15+84078a^14-160380a^13+222912a^12-228420a^11+174960a^10"
                "-109728a^9+73386a^8-58320a^7+39690a^6-16524a^5+1458a^4+2268a^3-972a^2+54"),
              0};
    default:
      throw DomainError("no closed form for order " + std::to_string(n));
  }
}

}  // namespace

ShortAB<Rational> ClosedFormAB::eval(const Rational& alpha) const {
  if ((a_pole > 0 || b_pole > 0) && alpha == 0) throw DomainError("closed form has a pole at alpha = 0");
  Rational a = a_num.eval(alpha) / pow(alpha, static_cast<long>(a_pole));
  Rational b = b_num.eval(alpha) / pow(alpha, static_cast<long>(b_pole));
  return {a, b};
}

const ClosedFormAB& closed_form_AB(int n) {
  static const ClosedFormAB forms[] = {build(5), build(7), build(8), build(9)};
  switch (n) {
    case 5: return forms[0];
    case 7: return forms[1];
    case 8: return forms[2];
    case 9: return forms[3];
    default: throw DomainError("no closed form for order " + std::to_string(n));
  }
}

}  // namespace etor

#include "etor/disc_bounds.hpp"

#include "etor/errors.hpp"

namespace etor {

namespace {

BiPoly X(const char* text) { return BiPoly::parse(text, 'x', 'y'); }

Integer seven(unsigned long e) { return pow(Integer(7), e); }

DiscFormula build(int n) {
  switch (n) {
    case 2:
      return {2, Integer(16) * X("4x-y^2") * X("x+2y^2").pow(2), 3, DegreeReduction{1, 2}};
    case 3:
      return {3, Integer(16 * 27) * X("5x^3+y") * X("9x^3+y").pow(3), 4, DegreeReduction{0, 3}};
    case 4:
      return {4, Integer(16) * X("y^2") * X("12x-5y^2") * X("3x-y^2").pow(4), 6, DegreeReduction{1, 2}};
    case 5:
      return {5, Integer(pow(Integer(6), 12)) * X("x^5y^5") * X("x^2+11xy-y^2"), 12, std::nullopt};
    case 7:
      return {7, pow(Integer(2), 12) * X("x^7y^7") * X("x^3-8x^2y+5xy^2+y^3") * X("y-x").pow(7), 24, std::nullopt};
    case 8:
      return {8, pow(Integer(3), 12) * X("x^8y^2") * X("8x^2-8xy+y^2") * X("2x-y").pow(4) * X("x-y").pow(8), 24,
              std::nullopt};
    case 9:
      return {9, Integer(-256) * X("x^9") * X("x^3-6x^2y+3xy^2+y^3") * X("x^2-xy+y^2").pow(3) * X("x-y").pow(9), 27,
              std::nullopt};
    default:
      throw DomainError("no discriminant formula for order " + std::to_string(n));
  }
}

}  // namespace

std::string DegreeReduction::tag() const {
  const char v = variable == 0 ? 'x' : 'y';
  return std::string(1, v) + "^" + std::to_string(power) + " -> " + v;
}

BiPoly DiscFormula::reduced() const { return reduction ? poly.contract(reduction->variable, reduction->power) : poly; }

const DiscFormula& disc_formula(int n) {
  static const DiscFormula table[] = {build(2), build(3), build(4), build(5), build(7), build(8), build(9)};
  for (const auto& f : table)
    if (f.n == n) return f;
  throw DomainError("no discriminant formula for order " + std::to_string(n));
}

Integer disc_poly(int n, const Integer& x, const Integer& y) { return disc_formula(n).poly.eval(x, y); }

Integer evertse_bound(unsigned r, unsigned t) {
  if (r < 3) throw DomainError("evertse_bound: Thue degree must be at least 3");
  const unsigned long c = binomial(r, 3);
  return seven(15 * (c + 1) * (c + 1)) + 6 * seven(2 * c * (t + 1UL));
}

CountBound mazur_count_bound(int n, unsigned t) {
  Integer v;
  const unsigned long t1 = t + 1UL;
  switch (n) {
    case 2: case 4: case 6: case 8: case 10: case 12:
      v = seven(60) + 6 * seven(2 * t1);
      break;
    case 3: case 9:
      v = seven(375) + 6 * seven(8 * t1);
      break;
    case 5:
      v = seven(1815) + 6 * seven(20 * t1);
      break;
    case 7:
      v = seven(19440) + 6 * seven(70 * t1);
      break;
    default:
      throw DomainError("mazur_count_bound: " + std::to_string(n) + " is not a Mazur order");
  }
  return {n, t, v};
}

unsigned count_bound_thue_degree(int n) {
  switch (n) {
    case 2: case 4: case 6: case 8: case 10: case 12: return 3;
    case 3: case 9: return 4;
    case 5: return 5;
    case 7: return 7;
    default: throw DomainError(std::to_string(n) + " is not a Mazur order");
  }
}

unsigned prime_factor_count(const Integer& delta, std::uint64_t trial_limit) {
  Factorization f = factorize(delta, trial_limit);
  if (!f.complete())
    throw FactorizationIncomplete("prime_factor_count: cofactor " + f.cofactor.get_str() + " not factored within trial limit");
  return static_cast<unsigned>(f.factors.size());
}

}  // namespace etor

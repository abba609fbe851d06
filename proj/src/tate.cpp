#include "etor/tate.hpp"

#include <map>
#include <mutex>

namespace etor {

const std::vector<int>& tate_orders() {
  static const std::vector<int> orders{4, 5, 6, 7, 8, 9, 10, 12};
  return orders;
}

bool is_tate_order(int n) { return (n >= 4 && n <= 10) || n == 12; }

TateBC<Rational> tate_bc(int n, const Rational& alpha) {
  if (!is_tate_order(n)) throw DomainError("no Tate normal form for order " + std::to_string(n));
  const Rational one(1);
  if (n == 8 && alpha == 0) throw DomainError("order 8 Tate form has a pole at alpha = 0");
  if (n == 10 && alpha - (alpha - one) * (alpha - one) == 0)
    throw DomainError("order 10 Tate form has a pole at alpha = " + alpha.get_str());
  if (n == 12 && alpha == one) throw DomainError("order 12 Tate form has a pole at alpha = 1");
  return tate_bc_generic(n, alpha);
}

ShortAB<Rational> long_to_short(const LongWeierstrass<Rational>& w) { return long_to_short_generic(w); }

ShortAB<Rational> tate_AB(int n, const Rational& alpha) {
  ShortAB<Rational> ab = long_to_short(tate_long_form(tate_bc(n, alpha)));
  if (4 * ab.a * ab.a * ab.a + 27 * ab.b * ab.b == 0)
    throw DomainError("Tate curve of order " + std::to_string(n) + " degenerates at alpha = " + alpha.get_str());
  return ab;
}

Point tate_origin_image(int n, const Rational& alpha) {
  tate_AB(n, alpha);
  LongWeierstrass<Rational> w = tate_long_form(tate_bc(n, alpha));
  Rational b2 = w.a1 * w.a1 + 4 * w.a2;
  return {3 * b2, 108 * w.a3};
}

const ShortAB<RationalFunction>& tate_AB_symbolic(int n) {
  static std::mutex mu;
  static std::map<int, ShortAB<RationalFunction>> cache;
  if (!is_tate_order(n)) throw DomainError("no Tate normal form for order " + std::to_string(n));
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    RationalFunction al = RationalFunction::variable();
    it = cache.emplace(n, long_to_short_generic(tate_long_form(tate_bc_generic(n, al)))).first;
  }
  return it->second;
}

}  // namespace etor

#include "etor/families.hpp"

#include <algorithm>

#include "etor/errors.hpp"

namespace etor {

namespace {

BiPoly F(const char* text) { return BiPoly::parse(text); }

ThueFamily order5() {
  ThueFamily f;
  f.n = 5;
  f.kset = {Rational(1)};
  f.u_form = F("q^4-12q^3p+14q^2p^2+12p^3q+p^4");
  f.v_form = F("p^2+q^2") * F("q^4-18q^3p+74q^2p^2+18p^3q+p^4");
  f.b_sign = 1;
  f.point_x = {F("p^2-6pq+q^2"), F("p^2+6pq+q^2")};
  f.point_y = {F("p^2q"), F("pq^2")};
  f.table_degrees = {4, 6, 2, 3};
  f.sigma = -1;
  f.k_exponent = 1;
  return f;
}

ThueFamily order7() {
  ThueFamily f;
  f.n = 7;
  f.kset = {Rational(1), Rational(1, 3)};
  f.u_form = F("p^2-pq+q^2") * F("q^6+5q^5p-10q^4p^2-15q^3p^3+30q^2p^4-11qp^5+p^6");
  f.v_form = F("p^12-18p^11q+117p^10q^2-354p^9q^3+570p^8q^4-486p^7q^5+273p^6q^6"
               "-222p^5q^7+174p^4q^8-46p^3q^9-15p^2q^10+6pq^11+q^12");
  f.b_sign = 1;
  f.point_x = {F("p^4-6p^3q+15p^2q^2-10pq^3+q^4"), F("p^4-6p^3q+3p^2q^2+2pq^3+q^4"),
               F("p^4+6p^3q-9p^2q^2+2pq^3+q^4")};
  const BiPoly pmq = F("p-q");
  f.point_y = {pmq.pow(3) * F("pq^2"), pmq * F("p^2q^3"), pmq.pow(2) * F("p^3q")};
  f.table_degrees = {8, 12, 4, 6};
  f.sigma = 1;
  f.k_exponent = 2;
  return f;
}

ThueFamily order8() {
  ThueFamily f;
  f.n = 8;
  f.kset = {Rational(1), Rational(1, 2)};
  f.u_form = F("q^8-16pq^7+96p^2q^6-288p^3q^5+480p^4q^4-448p^5q^3+224p^6q^2-64p^7q+16p^8");
  f.v_form = F("8p^4-16p^3q+16p^2q^2-8pq^3+q^4") *
             F("8p^8-32p^7q-80p^6q^2+352p^5q^3-456p^4q^4+288p^3q^5-96p^2q^6+16pq^7-q^8");
  f.b_sign = -1;
  f.point_x = {F("-4p^4+20p^3q-20p^2q^2+4pq^3+q^4"), F("-4p^4-4p^3q+16p^2q^2-8pq^3+q^4")};
  const BiPoly qmp = F("q-p"), qm2p = F("q-2p");
  f.point_y = {F("pq") * qmp.pow(3) * qm2p, F("p^3q") * qmp * qm2p};
  f.table_degrees = {8, 12, 4, 6};
  f.sigma = 1;
  f.k_exponent = 2;
  return f;
}

ThueFamily order9() {
  ThueFamily f;
  f.n = 9;
  f.kset = {Rational(1), Rational(1, 3)};
  f.u_form = F("q^3-3p^2q+p^3") * F("q^9-9q^7p^2+27q^6p^3-45q^5p^4+54q^4p^5-48q^3p^6+27p^7q^2-9p^8q+p^9");
  f.v_form = F("p^18-18p^17q+135p^16q^2-570p^15q^3+1557p^14q^4-2970p^13q^5+4128p^12q^6"
               "-4230p^11q^7+3240p^10q^8-2032p^9q^9+1359p^8q^10-1080p^7q^11+735p^6q^12"
               "-306p^5q^13+27p^4q^14+42p^3q^15-18p^2q^16+q^18");
  f.b_sign = 1;
  f.point_x = {F("p^6+6p^5q-15p^4q^2+14p^3q^3-6p^2q^4+q^6"),
               F("p^6-6p^5q+21p^4q^2-34p^3q^3+30p^2q^4-12pq^5+q^6"),
               F("p^6-6p^5q+9p^4q^2-10p^3q^3+6p^2q^4+q^6")};
  f.point_y = {F("p^4q") * F("p^4-3p^3q+4p^2q^2-3pq^3+q^4"),
               F("pq^2") * F("p^6-5p^5q+11p^4q^2-14p^3q^3+11p^2q^4-5pq^5+q^6"),
               F("p^2q^4") * F("p^3-2p^2q+2pq^2-q^3")};
  f.table_degrees = {12, 18, 6, 9};
  f.sigma = 1;
  f.k_exponent = 3;
  return f;
}

}  // namespace

FamilyDegrees ThueFamily::formal_degrees() const {
  auto max_degree = [](const std::vector<BiPoly>& forms) {
    int d = -1;
    for (const auto& f : forms) d = std::max(d, f.total_degree());
    return d;
  };
  return {u_form.total_degree(), v_form.total_degree(), max_degree(point_x), max_degree(point_y)};
}

Integer ThueFamily::lambda(const Integer& p, const Integer& q) const {
  switch (n) {
    case 5: return q;
    case 7: return q * q;
    case 8: return p * q;
    case 9: return q * q * q;
    default: throw DomainError("no family for order " + std::to_string(n));
  }
}

bool ThueFamily::side_conditions_hold(const Integer& p, const Integer& q) const {
  switch (n) {
    case 5: return p != 0 && q != 0;
    case 7:
    case 9: return p != 0 && q != 0 && p != q;
    case 8: return p != q && 2 * p != q;
    default: return false;
  }
}

std::string ThueFamily::side_conditions() const {
  switch (n) {
    case 5: return "p != 0, q != 0";
    case 7:
    case 9: return "p != 0, q != 0, p != q";
    case 8: return "p != q, 2p != q";
    default: return "";
  }
}

bool ThueFamily::in_kset(const Rational& k) const { return std::find(kset.begin(), kset.end(), k) != kset.end(); }

const std::vector<int>& thue_orders() {
  static const std::vector<int> orders{5, 7, 8, 9};
  return orders;
}

bool is_thue_order(int n) { return n == 5 || n == 7 || n == 8 || n == 9; }

const ThueFamily& thue_family(int n) {
  static const ThueFamily families[] = {order5(), order7(), order8(), order9()};
  switch (n) {
    case 5: return families[0];
    case 7: return families[1];
    case 8: return families[2];
    case 9: return families[3];
    default: throw DomainError("no binary-form family for order " + std::to_string(n) + " (expected 5, 7, 8 or 9)");
  }
}

}  // namespace etor

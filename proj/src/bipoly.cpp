#include "etor/bipoly.hpp"

#include <cctype>
#include <sstream>

#include "etor/errors.hpp"

namespace etor {

BiPoly BiPoly::constant(const Integer& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Integer& c, unsigned e1, unsigned e2) {
  BiPoly out;
  out.add_term({e1, e2}, c);
  return out;
}

void BiPoly::add_term(Exponents e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly BiPoly::parse(std::string_view text, char v1, char v2) {
  BiPoly out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  skip_ws();
  if (i == text.size()) throw DomainError("empty polynomial text");
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    std::string digits = read_uint();
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    unsigned e[2] = {0, 0};
    bool any_var = false;
    skip_ws();
    while (i < text.size() && (text[i] == v1 || text[i] == v2)) {
      int which = text[i] == v1 ? 0 : 1;
      ++i;
      unsigned ex = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string ed = read_uint();
        if (ed.empty()) throw DomainError("missing exponent in polynomial text");
        ex = static_cast<unsigned>(std::stoul(ed));
      }
      e[which] += ex;
      any_var = true;
      skip_ws();
    }
    if (digits.empty() && !any_var) throw DomainError("malformed polynomial term near offset " + std::to_string(i));
    out.add_term({e[0], e[1]}, sign * c);
    skip_ws();
  }
  return out;
}

Integer BiPoly::coeff(unsigned e1, unsigned e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? Integer(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first + e.second));
  return d;
}

bool BiPoly::is_homogeneous() const {
  const int d = total_degree();
  for (const auto& [e, c] : terms_)
    if (static_cast<int>(e.first + e.second) != d) return false;
  return true;
}

Integer BiPoly::eval(const Integer& a, const Integer& b) const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) acc += c * etor::pow(a, e.first) * etor::pow(b, e.second);
  return acc;
}

Rational BiPoly::eval(const Rational& a, const Rational& b) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += Rational(c) * etor::pow(a, e.first) * etor::pow(b, e.second);
  return acc;
}

BiPoly BiPoly::contract(int variable, unsigned k) const {
  if (k == 0) throw DomainError("contract: k must be positive");
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    unsigned ex = variable == 0 ? e.first : e.second;
    if (ex % k != 0) throw DomainError("contract: exponent not divisible by substitution power");
    Exponents ne = variable == 0 ? Exponents{ex / k, e.second} : Exponents{e.first, ex / k};
    out.add_term(ne, c);
  }
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly out = constant(1), base = *this;
  while (e > 0) {
    if (e & 1U) out = out * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

BiPoly operator*(const Integer& s, const BiPoly& a) { return BiPoly::constant(s) * a; }

std::string BiPoly::to_string(char v1, char v2) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (c < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    if (mag != 1 || (e.first == 0 && e.second == 0)) os << mag.get_str();
    if (e.first > 0) os << v1 << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second > 0) os << v2 << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    first = false;
  }
  return os.str();
}

}  // namespace etor

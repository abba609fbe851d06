#include "etor/torsion.hpp"

#include <algorithm>
#include <array>

#include "etor/errors.hpp"

namespace etor {

namespace {

constexpr unsigned kMazurCap = 12;

Integer cubic_at(const Integer& a, const Integer& b, const Integer& x) { return (x * x + a) * x + b; }

// Integer zero of a monotone cubic on [lo, hi], if one exists.
void search_monotone(const Integer& a, const Integer& b, Integer lo, Integer hi, bool increasing,
                     std::vector<Integer>& out) {
  while (lo <= hi) {
    Integer mid = lo + hi;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
    Integer v = cubic_at(a, b, mid);
    if (v == 0) {
      out.push_back(mid);
      return;
    }
    if ((v < 0) == increasing) lo = mid + 1;
    else hi = mid - 1;
  }
}

// Drops y for which y^2 is not a value of x^3 + a x + b modulo some small m.
class ResidueSieve {
 public:
  explicit ResidueSieve(const Curve& c) {
    for (unsigned long m : kModuli) {
      std::vector<bool> hit(m, false);
      const unsigned long am = mpz_fdiv_ui(c.a.get_mpz_t(), m), bm = mpz_fdiv_ui(c.b.get_mpz_t(), m);
      for (unsigned long x = 0; x < m; ++x) hit[((x * x % m) * x + am * x + bm) % m] = true;
      values_.push_back(std::move(hit));
    }
  }

  bool admits(const Integer& y) const {
    for (std::size_t i = 0; i < kModuli.size(); ++i) {
      const unsigned long m = kModuli[i], r = mpz_fdiv_ui(y.get_mpz_t(), m);
      if (!values_[i][r * r % m]) return false;
    }
    return true;
  }

 private:
  static constexpr std::array<unsigned long, 14> kModuli{64, 27, 25, 49, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  std::vector<std::vector<bool>> values_;
};

}  // namespace

std::vector<Integer> integer_roots_depressed_cubic(const Integer& a, const Integer& b) {
  std::vector<Integer> roots;
  Integer bound = 1 + std::max(Integer(abs(a)), Integer(abs(b)));
  if (a >= 0) {
    search_monotone(a, b, -bound, bound, true, roots);
  } else {
    // f' vanishes at +-s, s = sqrt(-a/3); integer breakpoints around +-s.
    Rational t = make_rational(-a, 3);
    Integer t_floor;
    mpz_fdiv_q(t_floor.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    Integer s_floor = sqrt(t_floor);
    Integer s_ceil = (Rational(s_floor * s_floor) == t) ? s_floor : Integer(s_floor + 1);
    search_monotone(a, b, -bound, -s_ceil, true, roots);
    search_monotone(a, b, -s_floor, s_floor, false, roots);
    search_monotone(a, b, s_ceil, bound, true, roots);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string MazurGroup::label() const {
  if (full_two_torsion) return "Z/2Z x Z/" + std::to_string(cyclic_order) + "Z";
  return "Z/" + std::to_string(cyclic_order) + "Z";
}

bool is_mazur_group(const MazurGroup& g) {
  if (g.full_two_torsion) return g.cyclic_order == 2 || g.cyclic_order == 4 || g.cyclic_order == 6 || g.cyclic_order == 8;
  return (g.cyclic_order >= 1 && g.cyclic_order <= 10) || g.cyclic_order == 12;
}

std::vector<Point> torsion_points(const Curve& c, std::uint64_t trial_limit) {
  if (is_singular(c)) throw SingularCurve("torsion of a singular curve");
  Factorization f = factorize(disc(c), trial_limit);
  if (!f.complete())
    throw OracleUnavailable("oracle unavailable: |disc| has unfactored cofactor " + f.cofactor.get_str());

  std::vector<Point> out{Point::infinity()};
  auto consider = [&](const Integer& x, const Integer& y) {
    Point p{Rational(x), Rational(y)};
    if (point_order(c, p, kMazurCap)) out.push_back(p);
  };

  for (const auto& x : integer_roots_depressed_cubic(c.a, c.b)) consider(x, 0);

  // y > 0 with y^2 | disc: each prime to at most half its exponent.
  Factorization half = f;
  half.sign = 1;
  for (auto& pp : half.factors) pp.exponent /= 2;
  const ResidueSieve sieve(c);
  for (const auto& y : divisors(half)) {
    if (!sieve.admits(y)) continue;
    Integer y2 = y * y;
    for (const auto& x : integer_roots_depressed_cubic(c.a, Integer(c.b - y2))) {
      consider(x, y);
      consider(x, -y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TorsionReport torsion_structure(const Curve& c, std::uint64_t trial_limit) {
  TorsionReport r;
  r.points = torsion_points(c, trial_limit);
  const auto two_torsion = std::count_if(r.points.begin(), r.points.end(),
                                         [](const Point& p) { return !p.is_infinity() && p.y() == 0; });
  const auto order = static_cast<unsigned>(r.points.size());
  if (two_torsion == 3) {
    if (order % 2 != 0) throw std::logic_error("torsion oracle: full two-torsion with odd group order");
    r.group = {order / 2, true};
  } else {
    r.group = {order, false};
  }
  if (!is_mazur_group(r.group)) throw std::logic_error("torsion oracle: group " + r.group.label() + " is not in Mazur's list");
  return r;
}

bool has_point_of_order(const TorsionReport& report, const Curve& c, unsigned n) {
  return std::any_of(report.points.begin(), report.points.end(),
                     [&](const Point& p) { return point_order(c, p, kMazurCap) == n; });
}

bool has_point_of_order(const Curve& c, unsigned n, std::uint64_t trial_limit) {
  if (n < 1 || n > kMazurCap) throw DomainError("has_point_of_order: n must be in 1..12");
  if (n == 1) return true;
  return has_point_of_order(torsion_structure(c, trial_limit), c, n);
}

}  // namespace etor

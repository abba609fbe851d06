#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etor/curve.hpp"
#include "etor/errors.hpp"

namespace etor {

/// Raised when |disc| cannot be factored within the trial limit, so the
/// Nagell-Lutz candidate set is unknown.
class OracleUnavailable : public FactorizationIncomplete {
 public:
  using FactorizationIncomplete::FactorizationIncomplete;
};

/// One of Mazur's fifteen groups.
struct MazurGroup {
  unsigned cyclic_order = 1;  // n for Z/nZ, or 2n for Z/2Z x Z/2nZ
  bool full_two_torsion = false;

  unsigned order() const { return full_two_torsion ? 2 * cyclic_order : cyclic_order; }
  unsigned exponent() const { return cyclic_order; }
  std::string label() const;
  bool operator==(const MazurGroup&) const = default;
};

/// The groups that occur as rational torsion.
bool is_mazur_group(const MazurGroup& g);

struct TorsionReport {
  std::vector<Point> points;  // sorted, infinity first
  MazurGroup group;

  std::string label() const { return group.label(); }
  unsigned exponent() const { return group.exponent(); }
};

/// Full rational torsion subgroup by Nagell-Lutz: torsion points are integral
/// with y = 0 or y^2 | disc.
std::vector<Point> torsion_points(const Curve& c, std::uint64_t trial_limit = kDefaultTrialLimit);

TorsionReport torsion_structure(const Curve& c, std::uint64_t trial_limit = kDefaultTrialLimit);

bool has_point_of_order(const Curve& c, unsigned n, std::uint64_t trial_limit = kDefaultTrialLimit);
bool has_point_of_order(const TorsionReport& report, const Curve& c, unsigned n);

/// Integer roots of x^3 + a x + b, ascending.
std::vector<Integer> integer_roots_depressed_cubic(const Integer& a, const Integer& b);

}  // namespace etor

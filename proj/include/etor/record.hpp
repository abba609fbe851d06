#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "etor/thue.hpp"

namespace etor {

/// Persisted form of a generated or detected curve. Big integers are decimal
/// strings so no consumer needs wide numeric types.
struct CurveRecord {
  int n = 0;
  std::string p, q, k;
  std::string a, b, delta;
  std::vector<std::pair<std::string, std::string>> points;
  std::string group_label;
  std::string provenance;  // "generated" | "detected"
  std::string model;       // "direct" | "six_twist"
};

/// Runs the torsion oracle for the group label.
CurveRecord make_record(const GeneratedCurve& g, const std::string& provenance,
                        std::uint64_t trial_limit = kDefaultTrialLimit);

nlohmann::json to_json(const CurveRecord& r);
CurveRecord record_from_json(const nlohmann::json& j);

/// Rebuilds the curve from the witness and checks coefficients, discriminant,
/// points on curve and exact order n. Throws DomainError on mismatch.
void revalidate(const CurveRecord& r);

/// n,p,q,k,A,B,group
std::string to_csv_row(const CurveRecord& r);
std::string csv_header();

}  // namespace etor

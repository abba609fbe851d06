#include "etor/record.hpp"

#include "etor/torsion.hpp"

namespace etor {

CurveRecord make_record(const GeneratedCurve& g, const std::string& provenance, std::uint64_t trial_limit) {
  CurveRecord r;
  r.n = g.witness.n;
  r.p = to_string(g.witness.p);
  r.q = to_string(g.witness.q);
  r.k = to_string(g.witness.k);
  r.a = to_string(g.curve.a);
  r.b = to_string(g.curve.b);
  r.delta = to_string(g.delta);
  for (const auto& pt : g.points) r.points.emplace_back(to_string(pt.x()), to_string(pt.y()));
  r.group_label = torsion_structure(g.curve, trial_limit).label();
  r.provenance = provenance;
  r.model = g.six_twist ? "six_twist" : "direct";
  return r;
}

nlohmann::json to_json(const CurveRecord& r) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& [x, y] : r.points) pts.push_back({x, y});
  return {{"n", r.n},       {"p", r.p},         {"q", r.q},
          {"k", r.k},       {"A", r.a},         {"B", r.b},
          {"delta", r.delta}, {"points", pts}, {"group_label", r.group_label},
          {"provenance", r.provenance}, {"model", r.model}};
}

CurveRecord record_from_json(const nlohmann::json& j) {
  try {
    CurveRecord r;
    r.n = j.at("n").get<int>();
    r.p = j.at("p").get<std::string>();
    r.q = j.at("q").get<std::string>();
    r.k = j.at("k").get<std::string>();
    r.a = j.at("A").get<std::string>();
    r.b = j.at("B").get<std::string>();
    r.delta = j.at("delta").get<std::string>();
    for (const auto& pt : j.at("points")) r.points.emplace_back(pt.at(0).get<std::string>(), pt.at(1).get<std::string>());
    r.group_label = j.at("group_label").get<std::string>();
    r.provenance = j.at("provenance").get<std::string>();
    r.model = j.value("model", std::string("direct"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed curve record: ") + e.what());
  }
}

void revalidate(const CurveRecord& r) {
  Witness w{r.n, Integer(r.p), Integer(r.q), parse_rational(r.k)};
  GeneratedCurve g = generate_curve(w);
  const Curve c{Integer(r.a), Integer(r.b)};
  if (!(c == g.curve)) throw DomainError("record coefficients do not match its witness " + w.to_string());
  if (Integer(r.delta) != disc(c)) throw DomainError("record discriminant mismatch");
  if ((r.model == "six_twist") != g.six_twist) throw DomainError("record model tag mismatch");
  if (r.points.empty()) throw DomainError("record has no points");
  for (const auto& [xs, ys] : r.points) {
    Point p{parse_rational(xs), parse_rational(ys)};
    if (!on_curve(c, p)) throw DomainError("record point " + p.to_string() + " is off the curve");
    if (point_order(c, p, static_cast<unsigned>(r.n)) != static_cast<unsigned>(r.n))
      throw DomainError("record point " + p.to_string() + " does not have order " + std::to_string(r.n));
  }
}

std::string csv_header() { return "n,p,q,k,A,B,group"; }

std::string to_csv_row(const CurveRecord& r) {
  return std::to_string(r.n) + "," + r.p + "," + r.q + "," + r.k + "," + r.a + "," + r.b + "," + r.group_label;
}

}  // namespace etor

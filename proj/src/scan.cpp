#include "etor/scan.hpp"

#include <atomic>
#include <optional>
#include <string>
#include <thread>

#include "etor/record.hpp"

namespace etor {

namespace {

enum class CellOutcome { Emitted, SideConditions, Degenerate };

struct CellResult {
  CellOutcome outcome = CellOutcome::SideConditions;
  std::string line;
};

CellResult run_cell(const RunConfig& cfg, const Witness& w) {
  const ThueFamily& fam = thue_family(w.n);
  if (!fam.side_conditions_hold(w.p, w.q)) return {CellOutcome::SideConditions, {}};
  try {
    GeneratedCurve g = generate_curve(w);
    CurveRecord r = make_record(g, "generated", cfg.trial_limit);
    return {CellOutcome::Emitted, cfg.csv ? to_csv_row(r) : to_json(r).dump()};
  } catch (const DegenerateWitness&) {
    return {CellOutcome::Degenerate, {}};
  }
}

}  // namespace

ScanStats run_scan(const RunConfig& cfg, std::ostream& out) {
  const ThueFamily& fam = thue_family(cfg.n);
  const std::vector<Rational>& ks = cfg.ks.empty() ? fam.kset : cfg.ks;
  for (const auto& k : ks)
    if (!fam.in_kset(k)) throw DomainError("k = " + k.get_str() + " is not in the k-set for order " + std::to_string(cfg.n));
  if (cfg.pmin > cfg.pmax || cfg.qmin > cfg.qmax) throw DomainError("empty scan grid");

  std::vector<Witness> cells;
  for (long p = cfg.pmin; p <= cfg.pmax; ++p)
    for (long q = cfg.qmin; q <= cfg.qmax; ++q)
      for (const auto& k : ks) cells.push_back({cfg.n, Integer(p), Integer(q), k});

  if (cfg.csv) out << csv_header() << '\n';
  ScanStats stats;
  const unsigned workers = std::max(1U, cfg.workers);
  constexpr std::size_t kChunk = 256;
  for (std::size_t base = 0; base < cells.size(); base += kChunk) {
    const std::size_t end = std::min(cells.size(), base + kChunk);
    std::vector<CellResult> results(end - base);
    std::atomic<std::size_t> next{base};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
      for (std::size_t i = next++; i < end && !failed; i = next++) {
        try {
          results[i - base] = run_cell(cfg, cells[i]);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    for (const auto& r : results) {
      switch (r.outcome) {
        case CellOutcome::Emitted:
          out << r.line << '\n';
          ++stats.emitted;
          break;
        case CellOutcome::SideConditions: ++stats.skipped_side_conditions; break;
        case CellOutcome::Degenerate: ++stats.skipped_degenerate; break;
      }
    }
  }
  return stats;
}

}  // namespace etor

#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "etor/record.hpp"
#include "etor/scan.hpp"

using namespace etor;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ETOR_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("record round trip and revalidation") {
  CurveRecord r = make_record(generate_curve({5, Integer(1), Integer(1), Rational(1)}), "generated");
  json j = to_json(r);
  CHECK(j["A"] == "-432");
  CHECK(j["B"] == "8208");
  CHECK(j["delta"] == "-23944605696");
  CHECK(j["group_label"] == "Z/5Z");
  CHECK(j["k"] == "1");
  CurveRecord back = record_from_json(json::parse(j.dump()));
  CHECK_NOTHROW(revalidate(back));
  CHECK(to_json(back) == j);

  CurveRecord bad = back;
  bad.b = "8209";
  CHECK_THROWS_AS(revalidate(bad), DomainError);
  bad = back;
  bad.points[0].second = "107";
  CHECK_THROWS_AS(revalidate(bad), DomainError);
  bad = back;
  bad.delta = "1";
  CHECK_THROWS_AS(revalidate(bad), DomainError);
  CHECK_THROWS_AS(record_from_json(json{{"n", 5}}), DomainError);

  CurveRecord six = make_record(generate_curve({7, Integer(2), Integer(1), make_rational(1, 3)}), "generated");
  CHECK_NOTHROW(revalidate(record_from_json(to_json(six))));
}

TEST_CASE("scan n = 5 over |p|, |q| <= 3") {
  RunConfig cfg;
  cfg.n = 5;
  std::ostringstream out;
  ScanStats st = run_scan(cfg, out);
  std::vector<std::string> ls = lines(out.str());
  CHECK(ls.size() == st.emitted);
  CHECK(st.emitted == 36);
  CHECK(st.skipped_side_conditions == 13);
  for (const auto& l : ls) CHECK_NOTHROW(revalidate(record_from_json(json::parse(l))));
}

TEST_CASE("scan output does not depend on the worker count") {
  RunConfig cfg;
  cfg.n = 7;
  cfg.pmin = cfg.qmin = -5;
  cfg.pmax = cfg.qmax = 5;
  std::ostringstream one, eight;
  run_scan(cfg, one);
  cfg.workers = 8;
  run_scan(cfg, eight);
  CHECK(one.str() == eight.str());
  CHECK_FALSE(one.str().empty());
}

TEST_CASE("scan n = 8 skips excluded cells") {
  RunConfig cfg;
  cfg.n = 8;
  cfg.pmin = cfg.qmin = -2;
  cfg.pmax = cfg.qmax = 2;
  std::ostringstream out;
  ScanStats st = run_scan(cfg, out);
  // p = q or 2p = q: 7 cells, each in both k branches.
  CHECK(st.skipped_side_conditions == 14);
  // The other cells with p = 0 or q = 0.
  CHECK(st.skipped_degenerate == 16);
  CHECK(st.emitted + st.skipped_side_conditions + st.skipped_degenerate == 50);

  cfg.ks = {Rational(1, 3)};
  CHECK_THROWS_AS(run_scan(cfg, out), DomainError);
}

TEST_CASE("scan csv") {
  RunConfig cfg;
  cfg.n = 9;
  cfg.pmin = 1;
  cfg.pmax = 2;
  cfg.qmin = 1;
  cfg.qmax = 1;
  cfg.ks = {Rational(1)};
  cfg.csv = true;
  std::ostringstream out;
  run_scan(cfg, out);
  CHECK(out.str() == "n,p,q,k,A,B,group\n9,2,1,1,-17739,1205766,Z/9Z\n");
}

TEST_CASE("cli detect") {
  RunResult r = run_cli("detect -43 166 7");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["witness"]["k"] == "1/3");
  CHECK(j["oracle_agrees"] == true);
  CHECK(j["record"]["provenance"] == "detected");
  CHECK_NOTHROW(revalidate(record_from_json(j["record"])));

  r = run_cli("detect -43 166 5");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["message"] == "no point of order 5");

  CHECK(run_cli("detect 0 0 5").code == 1);
  CHECK(run_cli("detect -43 166 6").code == 1);
  CHECK(run_cli("detect x 166 7").code == 1);
  CHECK(run_cli("detect -688 10624 7").code == 2);
  CHECK(run_cli("detect -43 166 7 --k 1").code == 0);
  CHECK(json::parse(run_cli("detect -43 166 7 --k 1").out)["brute_force"]["witnesses"].empty());
  CHECK(run_cli("detect -43 166 7 --k 1/5").code == 1);
  CHECK(run_cli("detect 1 1 5 --trial-limit 1").code == 1);
}

TEST_CASE("cli generate") {
  RunResult r = run_cli("generate 5 1 1");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["A"] == "-432");
  CHECK(j["B"] == "8208");
  CHECK(std::find(j["points"].begin(), j["points"].end(), json{"-12", "108"}) != j["points"].end());

  CHECK(run_cli("generate 8 1 1").code == 1);
  r = run_cli("generate 9 2 1");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["group_label"] == "Z/9Z");
  CHECK(run_cli("generate 7 2 1 --k 1/3").code == 0);
  CHECK(run_cli("generate 5 2 1 --k 1/3").code == 1);
}

TEST_CASE("cli scan, verify-identities and bound") {
  RunResult a = run_cli("scan 7 --pmin -4 --pmax 4 --qmin -4 --qmax 4 --workers 1");
  RunResult b = run_cli("scan 7 --pmin -4 --pmax 4 --qmin -4 --qmax 4 --workers 8");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run_cli("scan 6").code == 1);
  CHECK(lines(run_cli("scan 5 --csv").out).front() == "n,p,q,k,A,B,group");

  for (int n : {5, 7, 8, 9}) {
    RunResult v = run_cli("verify-identities " + std::to_string(n));
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["pass"] == true);
  }
  json v7 = json::parse(run_cli("verify-identities 7").out);
  CHECK(v7["suites"][1]["sigma"] == 1);
  CHECK(run_cli("verify-identities 6").code == 1);

  RunResult bd = run_cli("bound 2 64");
  CHECK(bd.code == 0);
  json jb = json::parse(bd.out);
  CHECK(jb["t"] == 1);
  CHECK(jb["bound"] == Integer(pow(Integer(7), 60) + 6 * pow(Integer(7), 4)).get_str());
  json j9 = json::parse(run_cli("bound 9 23944605696").out);
  CHECK(j9["t"] == 3);
  CHECK(j9["bound"] == Integer(pow(Integer(7), 375) + 6 * pow(Integer(7), 32)).get_str());
  CHECK(run_cli("bound 5 0").code == 1);
  CHECK(run_cli("bound 11 64").code == 1);
}

TEST_CASE("cli writes to --out") {
  std::string path = "cli_out_test.jsonl";
  std::remove(path.c_str());
  CHECK(run_cli("generate 5 1 1 --out " + path).code == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 256> buf{};
  std::size_t got = std::fread(buf.data(), 1, buf.size() - 1, f);
  std::fclose(f);
  CHECK(std::string(buf.data(), got).rfind("{\"A\":\"-432\"", 0) == 0);
  std::remove(path.c_str());
}

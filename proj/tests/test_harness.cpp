#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "sqfpow/errors.hpp"
#include "sqfpow/harness.hpp"
#include "sqfpow/identities.hpp"

using namespace sqfpow;

TEST_CASE("name parsing") {
  CHECK(parse_invariants("reg,depth,cm,linear,aim").size() == 5);
  CHECK_THROWS_AS(parse_invariants("reg,bogus"), InvalidParameter);
  CHECK(parse_conjecture("6.1") == Conjecture::CycleDepth);
  CHECK(parse_conjecture("wcycle-reg") == Conjecture::WhiskeredCycleReg);
  CHECK(parse_conjecture("6.3") == Conjecture::WhiskeredCycleDepth);
  CHECK_THROWS_AS(parse_conjecture("6.4"), InvalidParameter);
}

TEST_CASE("sweeps") {
  CHECK(all_k({path_family(5), cycle_family(6)}).size() == 2 + 3);
  const auto cd = conjecture_sweep(Conjecture::CycleDepth, 4, 6);
  CHECK(cd.size() == 1 + 1 + 2);
  for (const SweepCase& c : cd) CHECK(c.k >= 2);
  CHECK(conjecture_sweep(Conjecture::WhiskeredCycleReg, 3, 4).size() == 3 + 4);
}

TEST_CASE("verify paths") {
  HarnessConfig cfg;
  const VerificationReport r = run_verify(all_k(family_instances("path", 2, 7)), {Invariant::Reg, Invariant::Aim}, cfg);
  CHECK(r.exit_code() == 0);
  CHECK(r.summary().at("fail") == 0);
  CHECK(r.summary().at("pass") > 0);
  for (const CaseResult& c : r.cases) CHECK(c.status == CaseStatus::Pass);
}

TEST_CASE("out-of-range k and size caps are skipped") {
  HarnessConfig cfg;
  cfg.max_n = 6;
  const VerificationReport r = run_verify({{path_family(4), 3}, {cycle_family(9), 2}}, {Invariant::Reg}, cfg);
  REQUIRE(r.cases.size() == 2);
  CHECK(r.cases[0].status == CaseStatus::Skipped);
  CHECK(r.cases[1].status == CaseStatus::Skipped);
  CHECK(r.cases[1].note.find("max-n") != std::string::npos);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("aim applies to forests only") {
  HarnessConfig cfg;
  const VerificationReport r = run_verify({{cycle_family(6), 2}}, {Invariant::Aim}, cfg);
  REQUIRE(r.cases.size() == 1);
  CHECK(r.cases[0].status == CaseStatus::Skipped);
}

TEST_CASE("exit codes") {
  VerificationReport r;
  CHECK(r.exit_code() == 0);
  r.cases.push_back({});
  r.cases.back().status = CaseStatus::CounterexampleCandidate;
  CHECK(r.exit_code() == 3);
  r.cases.push_back({});
  r.cases.back().status = CaseStatus::Fail;
  CHECK(r.exit_code() == 2);
}

TEST_CASE("reports are deterministic across thread counts") {
  HarnessConfig one;
  HarnessConfig many;
  many.threads = 4;
  const auto sweep = all_k(family_instances("cycle", 4, 9));
  const auto inv = std::vector<Invariant>{Invariant::Reg, Invariant::Depth, Invariant::Linear};
  const VerificationReport a = run_verify(sweep, inv, one);
  const VerificationReport b = run_verify(sweep, inv, many);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_table() == b.to_table());
  const auto j = nlohmann::json::parse(a.to_json());
  CHECK(j.at("schema") == 1);
  CHECK_FALSE(j.at("cases").at(0).contains("elapsed_seconds"));
  CHECK(a.to_csv().rfind("family,k,invariant,", 0) == 0);
}

TEST_CASE("characteristic zero confirmation") {
  HarnessConfig cfg;
  cfg.confirm_every = 2;
  const VerificationReport r = run_verify(all_k({cycle_family(6)}), {Invariant::Reg}, cfg);
  int confirmations = 0;
  for (const CaseResult& c : r.cases) {
    if (c.invariant == "char0") {
      ++confirmations;
      CHECK(c.status == CaseStatus::Pass);
    }
  }
  CHECK(confirmations == 2);
}

TEST_CASE("scan with checkpoint resumes") {
  const auto path = std::filesystem::temp_directory_path() / "sqfpow_test_checkpoint.jsonl";
  std::filesystem::remove(path);
  HarnessConfig cfg;
  cfg.checkpoint_path = path.string();
  const auto sweep = conjecture_sweep(Conjecture::CycleDepth, 4, 9);
  const VerificationReport first = run_scan(Conjecture::CycleDepth, sweep, cfg);
  CHECK(first.exit_code() == 0);
  {
    std::ifstream in(path);
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == static_cast<int>(sweep.size()));
  }
  // A torn trailing line from an interrupted run is tolerated.
  {
    std::ofstream out(path, std::ios::app);
    out << "{\"key\": \"cyc";
  }
  const VerificationReport second = run_scan(Conjecture::CycleDepth, sweep, cfg);
  CHECK(second.to_json() == first.to_json());
  std::filesystem::remove(path);
}

TEST_CASE("identity suites are reproducible") {
  IdentityConfig cfg;
  cfg.trials = 5;
  cfg.seed = 42;
  const IdentityReport a = run_identities(cfg);
  const IdentityReport b = run_identities(cfg);
  CHECK(a.ok());
  CHECK(a.to_json() == b.to_json());
  cfg.seed = 43;
  CHECK(run_identities(cfg).to_json() != a.to_json());
  CHECK(random_graph(7, 10) == random_graph(7, 10));
  cfg.trials = 0;
  CHECK_THROWS_AS(run_identities(cfg), InvalidParameter);
}

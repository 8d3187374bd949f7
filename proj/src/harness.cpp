#include "sqfpow/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "sqfpow/errors.hpp"
#include "sqfpow/homalg.hpp"

namespace sqfpow {

using nlohmann::json;

std::string to_string(Invariant inv) {
  switch (inv) {
    case Invariant::Reg: return "reg";
    case Invariant::Depth: return "depth";
    case Invariant::CM: return "cm";
    case Invariant::Linear: return "linear";
    case Invariant::Aim: return "aim";
  }
  return "?";
}

std::string to_string(CaseStatus status) {
  switch (status) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::BoundOk: return "bound-ok";
    case CaseStatus::Skipped: return "skipped";
    case CaseStatus::CounterexampleCandidate: return "counterexample-candidate";
  }
  return "?";
}

std::string to_string(Conjecture c) {
  switch (c) {
    case Conjecture::CycleDepth: return "cycle-depth";
    case Conjecture::WhiskeredCycleReg: return "wcycle-reg";
    case Conjecture::WhiskeredCycleDepth: return "wcycle-depth";
  }
  return "?";
}

std::vector<Invariant> parse_invariants(std::string_view text) {
  std::vector<Invariant> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view name = text.substr(start, end - start);
    if (name == "reg") out.push_back(Invariant::Reg);
    else if (name == "depth") out.push_back(Invariant::Depth);
    else if (name == "cm") out.push_back(Invariant::CM);
    else if (name == "linear") out.push_back(Invariant::Linear);
    else if (name == "aim") out.push_back(Invariant::Aim);
    else throw InvalidParameter("unknown invariant '" + std::string(name) + "'");
    start = end + 1;
  }
  return out;
}

Conjecture parse_conjecture(std::string_view text) {
  if (text == "cycle-depth" || text == "6.1") return Conjecture::CycleDepth;
  if (text == "wcycle-reg" || text == "6.2") return Conjecture::WhiskeredCycleReg;
  if (text == "wcycle-depth" || text == "6.3") return Conjecture::WhiskeredCycleDepth;
  throw InvalidParameter("unknown conjecture '" + std::string(text) + "'");
}

std::vector<SweepCase> all_k(const std::vector<Family>& families) {
  std::vector<SweepCase> out;
  for (const Family& f : families) {
    const int nu = family_matching_number(f);
    for (int k = 1; k <= nu; ++k) out.push_back({f, k});
  }
  return out;
}

std::vector<SweepCase> conjecture_sweep(Conjecture conjecture, int lo, int hi) {
  std::vector<SweepCase> out;
  for (int size = lo; size <= hi; ++size) {
    if (conjecture == Conjecture::CycleDepth) {
      if (size < 4) continue;
      for (int k = 2; k <= size / 2; ++k) out.push_back({cycle_family(size), k});
    } else {
      if (size < 3) continue;
      for (int k = 1; k <= size; ++k) out.push_back({whiskered_cycle_family(size), k});
    }
  }
  return out;
}

namespace {

json prediction_json(const PredictionResult& p) {
  json j;
  switch (p.kind) {
    case PredictionKind::Exact:
      j["kind"] = "exact";
      j["value"] = p.lo;
      break;
    case PredictionKind::Interval:
      j["kind"] = "interval";
      j["lo"] = p.lo;
      j["hi"] = p.hi;
      break;
    case PredictionKind::NotCovered: j["kind"] = "not-covered"; break;
  }
  if (p.covered()) {
    j["status"] = p.proven() ? "proven" : "conjectural";
    j["source"] = p.source;
  }
  return j;
}

PredictionResult prediction_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "not-covered") return PredictionResult::not_covered();
  const auto status = j.at("status") == "proven" ? PredictionStatus::Proven : PredictionStatus::Conjectural;
  if (kind == "exact") return PredictionResult::exact(j.at("value"), status, j.at("source"));
  return PredictionResult::interval(j.at("lo"), j.at("hi"), status, j.at("source"));
}

json case_json(const CaseResult& c, bool timing) {
  json j;
  j["family"] = c.family;
  j["k"] = c.k;
  j["invariant"] = c.invariant;
  j["predicted"] = prediction_json(c.predicted);
  j["computed"] = c.computed ? json(*c.computed) : json(nullptr);
  j["status"] = to_string(c.status);
  if (!c.note.empty()) j["note"] = c.note;
  if (timing) j["elapsed_seconds"] = c.elapsed_seconds;
  return j;
}

CaseStatus status_from_string(const std::string& s) {
  for (CaseStatus st : {CaseStatus::Pass, CaseStatus::Fail, CaseStatus::BoundOk, CaseStatus::Skipped,
                        CaseStatus::CounterexampleCandidate}) {
    if (to_string(st) == s) return st;
  }
  throw ParseError(1, "unknown case status '" + s + "' in checkpoint");
}

CaseResult case_from_json(const json& j) {
  CaseResult c;
  c.family = j.at("family");
  c.k = j.at("k");
  c.invariant = j.at("invariant");
  c.predicted = prediction_from_json(j.at("predicted"));
  if (!j.at("computed").is_null()) c.computed = j.at("computed").get<int>();
  c.status = status_from_string(j.at("status"));
  if (j.contains("note")) c.note = j.at("note");
  if (j.contains("elapsed_seconds")) c.elapsed_seconds = j.at("elapsed_seconds");
  return c;
}

struct Mode {
  bool scan = false;
  std::vector<Invariant> invariants;
  Conjecture conjecture = Conjecture::CycleDepth;

  std::string selector() const {
    if (scan) return "scan:" + to_string(conjecture);
    std::string s = "verify:";
    for (Invariant inv : invariants) s += to_string(inv) + ",";
    return s;
  }
};

Invariant conjecture_invariant(Conjecture c) {
  return c == Conjecture::WhiskeredCycleReg ? Invariant::Reg : Invariant::Depth;
}

Predictions predictions_for(Invariant inv, const Family& f, int k) {
  switch (inv) {
    case Invariant::Reg: return predict_regularity(f, k);
    case Invariant::Depth: return predict_depth(f, k);
    case Invariant::CM: return predict_cm(f, k);
    case Invariant::Linear: return predict_linear_resolution(f, k);
    case Invariant::Aim: break;
  }
  return {PredictionResult::not_covered()};
}

int computed_value(Invariant inv, const InvariantBundle& b) {
  switch (inv) {
    case Invariant::Reg:
    case Invariant::Aim: return b.reg;
    case Invariant::Depth: return b.depth_quotient;
    case Invariant::CM: return b.is_cm ? 1 : 0;
    case Invariant::Linear: return b.linear_resolution ? 1 : 0;
  }
  return 0;
}

std::vector<Invariant> invariants_of(const Mode& mode) {
  return mode.scan ? std::vector<Invariant>{conjecture_invariant(mode.conjecture)} : mode.invariants;
}

std::vector<CaseResult> skipped_rows(const SweepCase& sc, const Mode& mode, const std::string& note) {
  std::vector<CaseResult> rows;
  for (Invariant inv : invariants_of(mode)) {
    CaseResult r;
    r.family = sc.family.descriptor();
    r.k = sc.k;
    r.invariant = to_string(inv);
    r.status = CaseStatus::Skipped;
    r.note = note;
    rows.push_back(std::move(r));
  }
  return rows;
}

CaseResult aim_row(const SweepCase& sc, const Graph& g, const InvariantBundle& b, const HarnessConfig& cfg) {
  CaseResult r;
  r.family = sc.family.descriptor();
  r.k = sc.k;
  r.invariant = "aim";
  if (!sc.family.is_forest()) {
    r.note = "aim + k = reg is only claimed for forests";
    return r;
  }
  if (g.edge_count() > cfg.aim_edge_cap) {
    r.note = "aim search capped at " + std::to_string(cfg.aim_edge_cap) + " edges";
    return r;
  }
  const AdmissibleResult aim = admissible_matching_number(g, sc.k, cfg.aim_edge_cap);
  r.predicted = PredictionResult::exact(aim.value + sc.k, PredictionStatus::Proven, "forest regularity is aim plus k");
  r.computed = b.reg;
  if (!aim.witness) {
    r.status = CaseStatus::Fail;
    r.note = "no admissible matching found";
    return r;
  }
  if (const auto problem = check_admissible_witness(g, *aim.witness, sc.k)) {
    r.status = CaseStatus::Fail;
    r.note = "invalid witness: " + *problem;
    return r;
  }
  r.status = r.predicted.lo == b.reg ? CaseStatus::Pass : CaseStatus::Fail;
  r.note = "aim " + std::to_string(aim.value);
  return r;
}

std::vector<CaseResult> evaluate(const SweepCase& sc, const Mode& mode, const HarnessConfig& cfg, bool confirm) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = sc.family.graph();
  const int nu = matching_number(g);
  if (sc.k < 1 || sc.k > nu) {
    return skipped_rows(sc, mode, "k outside 1.." + std::to_string(nu));
  }
  if (g.size() > cfg.max_n) {
    return skipped_rows(sc, mode, std::to_string(g.size()) + " vertices exceeds --max-n " + std::to_string(cfg.max_n));
  }
  const SqfIdeal ideal = sqf_power(g, sc.k);
  BettiTable table;
  try {
    table = betti_table(ideal, cfg.field, 1);
  } catch (const CapExceeded& e) {
    return skipped_rows(sc, mode, e.what());
  }
  const InvariantBundle bundle = invariants_from_table(ideal, table);

  std::vector<CaseResult> rows;
  for (Invariant inv : invariants_of(mode)) {
    if (inv == Invariant::Aim) {
      rows.push_back(aim_row(sc, g, bundle, cfg));
      continue;
    }
    const int value = computed_value(inv, bundle);
    bool any = false;
    for (const PredictionResult& p : predictions_for(inv, sc.family, sc.k)) {
      if (!p.covered() || p.proven() == mode.scan) continue;
      any = true;
      CaseResult r;
      r.family = sc.family.descriptor();
      r.k = sc.k;
      r.invariant = to_string(inv);
      r.predicted = p;
      r.computed = value;
      if (mode.scan) {
        r.status = p.contains(value) ? CaseStatus::Pass : CaseStatus::CounterexampleCandidate;
      } else if (p.kind == PredictionKind::Exact) {
        r.status = p.contains(value) ? CaseStatus::Pass : CaseStatus::Fail;
      } else {
        r.status = p.contains(value) ? CaseStatus::BoundOk : CaseStatus::Fail;
      }
      rows.push_back(std::move(r));
    }
    if (!any) {
      CaseResult r;
      r.family = sc.family.descriptor();
      r.k = sc.k;
      r.invariant = to_string(inv);
      r.computed = value;
      r.note = mode.scan ? "conjecture does not cover this case" : "no proven prediction";
      rows.push_back(std::move(r));
    }
  }
  if (confirm && !cfg.field.is_rational()) {
    CaseResult r;
    r.family = sc.family.descriptor();
    r.k = sc.k;
    r.invariant = "char0";
    const bool same = betti_table(ideal, FieldSpec{0}, 1) == table;
    r.computed = same ? 1 : 0;
    r.status = same ? CaseStatus::Pass : CaseStatus::Fail;
    r.note = same ? "Betti table identical over Q" : "Betti table differs over Q";
    rows.push_back(std::move(r));
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (CaseResult& r : rows) r.elapsed_seconds = elapsed;
  return rows;
}

std::string unit_key(const SweepCase& sc, const Mode& mode, const HarnessConfig& cfg, bool confirm) {
  return sc.family.descriptor() + "|" + std::to_string(sc.k) + "|" + mode.selector() + "|" +
         std::to_string(cfg.field.characteristic) + (confirm ? "|char0" : "");
}

std::unordered_map<std::string, std::vector<CaseResult>> load_checkpoint(const std::string& path) {
  std::unordered_map<std::string, std::vector<CaseResult>> done;
  std::ifstream in(path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error&) {
      // A torn final line from an interrupted run is expected; anything
      // earlier is corruption.
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError(line_no, "corrupt checkpoint line in " + path);
    }
    std::vector<CaseResult> rows;
    for (const json& c : j.at("cases")) rows.push_back(case_from_json(c));
    done[j.at("key").get<std::string>()] = std::move(rows);
  }
  return done;
}

VerificationReport run(const std::string& command, const std::vector<SweepCase>& sweep, const Mode& mode,
                       const HarnessConfig& cfg) {
  std::unordered_map<std::string, std::vector<CaseResult>> done;
  std::ofstream checkpoint;
  if (!cfg.checkpoint_path.empty()) {
    done = load_checkpoint(cfg.checkpoint_path);
    bool torn = false;
    if (std::ifstream tail(cfg.checkpoint_path, std::ios::ate); tail && tail.tellg() > 0) {
      tail.seekg(-1, std::ios::end);
      torn = tail.get() != '\n';
    }
    checkpoint.open(cfg.checkpoint_path, std::ios::app);
    if (!checkpoint) throw InvalidParameter("cannot open checkpoint file " + cfg.checkpoint_path);
    if (torn) checkpoint << '\n';
  }
  std::vector<std::vector<CaseResult>> results(sweep.size());
  std::mutex io;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < sweep.size();) {
      const bool confirm = cfg.confirm_every > 0 && i % cfg.confirm_every == 0;
      const std::string key = unit_key(sweep[i], mode, cfg, confirm);
      if (const auto it = done.find(key); it != done.end()) {
        results[i] = it->second;
        continue;
      }
      results[i] = evaluate(sweep[i], mode, cfg, confirm);
      if (checkpoint.is_open()) {
        json line;
        line["key"] = key;
        line["cases"] = json::array();
        for (const CaseResult& r : results[i]) line["cases"].push_back(case_json(r, true));
        const std::lock_guard lock(io);
        checkpoint << line.dump() << '\n' << std::flush;
      }
    }
  };
  const int workers = std::max(1, cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  VerificationReport report;
  report.command = command;
  report.config = cfg;
  for (auto& rows : results) {
    for (auto& r : rows) report.cases.push_back(std::move(r));
  }
  return report;
}

}  // namespace

std::map<std::string, int> VerificationReport::summary() const {
  std::map<std::string, int> counts;
  for (CaseStatus st : {CaseStatus::Pass, CaseStatus::Fail, CaseStatus::BoundOk, CaseStatus::Skipped,
                        CaseStatus::CounterexampleCandidate}) {
    counts[to_string(st)] = 0;
  }
  for (const CaseResult& c : cases) ++counts[to_string(c.status)];
  return counts;
}

int VerificationReport::exit_code() const {
  const bool failed = std::any_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == CaseStatus::Fail; });
  if (failed) return 2;
  const bool candidate = std::any_of(cases.begin(), cases.end(), [](const CaseResult& c) {
    return c.status == CaseStatus::CounterexampleCandidate;
  });
  return candidate ? 3 : 0;
}

std::string VerificationReport::to_json() const {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  j["config"] = {{"characteristic", config.field.characteristic},
                 {"max_n", config.max_n},
                 {"aim_edge_cap", config.aim_edge_cap},
                 {"confirm_every", config.confirm_every}};
  j["cases"] = json::array();
  for (const CaseResult& c : cases) j["cases"].push_back(case_json(c, config.timing));
  j["summary"] = summary();
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_table() const {
  std::size_t fw = 6;
  for (const CaseResult& c : cases) fw = std::max(fw, c.family.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(fw)) << "family" << "  " << std::setw(3) << "k" << "  "
      << std::setw(7) << "inv" << "  " << std::setw(9) << "computed" << "  " << std::setw(24) << "status"
      << "predicted\n";
  for (const CaseResult& c : cases) {
    out << std::setw(static_cast<int>(fw)) << c.family << "  " << std::setw(3) << c.k << "  " << std::setw(7)
        << c.invariant << "  " << std::setw(9) << (c.computed ? std::to_string(*c.computed) : "-") << "  "
        << std::setw(24) << to_string(c.status) << c.predicted.describe();
    if (!c.note.empty()) out << "  [" << c.note << "]";
    if (config.timing) out << "  " << std::fixed << std::setprecision(3) << c.elapsed_seconds << "s";
    out << '\n';
  }
  out << "summary:";
  for (const auto& [status, count] : summary()) out << ' ' << status << '=' << count;
  out << '\n';
  return out.str();
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "family,k,invariant,predicted_lo,predicted_hi,prediction_status,computed,status\n";
  for (const CaseResult& c : cases) {
    out << '"' << c.family << "\"," << c.k << ',' << c.invariant << ',';
    if (c.predicted.covered()) {
      out << c.predicted.lo << ',' << c.predicted.hi << ',' << (c.predicted.proven() ? "proven" : "conjectural");
    } else {
      out << ",,not-covered";
    }
    out << ',' << (c.computed ? std::to_string(*c.computed) : "") << ',' << to_string(c.status) << '\n';
  }
  return out.str();
}

VerificationReport run_verify(const std::vector<SweepCase>& sweep, const std::vector<Invariant>& invariants,
                              const HarnessConfig& config) {
  Mode mode;
  mode.invariants = invariants;
  return run("verify", sweep, mode, config);
}

VerificationReport run_scan(Conjecture conjecture, const std::vector<SweepCase>& sweep, const HarnessConfig& config) {
  Mode mode;
  mode.scan = true;
  mode.conjecture = conjecture;
  return run("scan " + to_string(conjecture), sweep, mode, config);
}

}  // namespace sqfpow

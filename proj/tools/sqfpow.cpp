#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqfpow/errors.hpp"
#include "sqfpow/families.hpp"
#include "sqfpow/formulas.hpp"
#include "sqfpow/harness.hpp"
#include "sqfpow/homalg.hpp"
#include "sqfpow/identities.hpp"

using namespace sqfpow;

namespace {

struct Range {
  int lo = 0;
  int hi = -1;
  bool set() const { return hi >= lo; }
};

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidParameter("bad " + what + " '" + std::string(text) + "'");
  }
  return value;
}

/// "a..b" or a single "a".
Range parse_range(const std::string& text) {
  if (text.empty()) return {};
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  const Range r{parse_int(text.substr(0, dots), "range"), parse_int(text.substr(dots + 2), "range")};
  if (r.lo > r.hi) throw InvalidParameter("empty range '" + text + "'");
  return r;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_int(item, "list entry"));
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot write " + path);
  out << content;
}

struct Common {
  int characteristic = kDefaultCharacteristic;
  int threads = 0;
  int max_n = kDefaultMaxN;
  std::string json_path;
  std::string csv_path;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--char", c.characteristic, "Field characteristic: 0 or an odd prime")->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker threads, 0 = all cores")->capture_default_str();
  cmd->add_option("--max-n", c.max_n, "Largest vertex count for a full Betti computation (engine limit 22)")
      ->capture_default_str();
  cmd->add_option("--json", c.json_path, "Write a JSON report to this path ('-' for stdout)");
  cmd->add_option("--csv", c.csv_path, "Write a CSV report to this path ('-' for stdout)");
  cmd->add_flag("--timing", c.timing, "Record elapsed times");
}

HarnessConfig harness_config(const Common& c, const std::string& checkpoint, int confirm_every) {
  HarnessConfig cfg;
  cfg.field = FieldSpec::of(c.characteristic);
  cfg.threads = c.threads;
  cfg.max_n = c.max_n;
  cfg.timing = c.timing;
  cfg.checkpoint_path = checkpoint;
  cfg.confirm_every = confirm_every;
  return cfg;
}

int emit_report(const VerificationReport& report, const Common& c) {
  if (!c.json_path.empty()) write_output(c.json_path, report.to_json());
  if (!c.csv_path.empty()) write_output(c.csv_path, report.to_csv());
  if (c.json_path != "-" && c.csv_path != "-") std::cout << report.to_table();
  return report.exit_code();
}

// compute

struct ComputeArgs {
  Common common;
  std::string target;
  std::string edges_path;
  int k = 0;
  bool all_k = false;
  bool betti = false;
};

Family load_target(const ComputeArgs& a) {
  if (!a.edges_path.empty()) {
    std::ifstream in(a.edges_path);
    if (!in) throw InvalidParameter("cannot read " + a.edges_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return custom_family(parse_edge_list(buffer.str()), a.edges_path);
  }
  if (a.target.empty()) throw InvalidParameter("give a family descriptor or --edges FILE");
  return parse_family(a.target);
}

int run_compute(const ComputeArgs& a) {
  const Family family = load_target(a);
  const Graph g = family.graph();
  const int nu = matching_number(g);
  if (g.size() > a.common.max_n) {
    throw CapExceeded(std::to_string(g.size()) + " vertices exceeds the cap of " + std::to_string(a.common.max_n) +
                      "; raise it with --max-n (engine limit " + std::to_string(kMaxEngineVariables) + ")");
  }
  if (!a.all_k && a.k < 0) throw InvalidParameter("k must be nonnegative");
  if (!a.all_k && a.k == 0) throw InvalidParameter("give --k K or --all-k");
  const FieldSpec field = FieldSpec::of(a.common.characteristic);

  std::vector<int> ks;
  if (a.all_k) {
    for (int k = 1; k <= nu; ++k) ks.push_back(k);
  } else {
    ks.push_back(a.k);
  }

  nlohmann::json report;
  report["schema"] = 1;
  report["graph"] = family.descriptor();
  report["vertices"] = g.size();
  report["edges"] = g.edge_count();
  report["matching_number"] = nu;
  report["characteristic"] = field.characteristic;
  report["results"] = nlohmann::json::array();
  std::string csv = "k,i,j,beta\n";
  std::ostringstream text;
  text << "graph   " << family.descriptor() << " (" << g.size() << " vertices, " << g.edge_count()
       << " edges, nu " << nu << ")\n";

  for (int k : ks) {
    const auto start = std::chrono::steady_clock::now();
    const SqfIdeal ideal = sqf_power(g, k);
    const BettiTable table = betti_table(ideal, field, a.common.threads);
    const InvariantBundle b = invariants_from_table(ideal, table);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    nlohmann::json r;
    r["k"] = k;
    r["generators"] = ideal.size();
    r["reg"] = b.reg;
    r["pd"] = b.pd_quotient;
    r["depth"] = b.depth_quotient;
    r["dim"] = b.krull_dim_quotient;
    r["cm"] = b.is_cm;
    if (ideal.is_zero()) {
      r["linear"] = nullptr;
    } else {
      r["linear"] = b.linear_resolution;
    }
    r["betti"] = nlohmann::json::array();
    for (const auto& [ij, beta] : table.entries()) {
      r["betti"].push_back({ij.first, ij.second, beta});
      csv += std::to_string(k) + "," + std::to_string(ij.first) + "," + std::to_string(ij.second) + "," +
             std::to_string(beta) + "\n";
    }
    if (a.common.timing) r["elapsed_seconds"] = elapsed;
    report["results"].push_back(r);

    text << "\nk       " << k << '\n';
    if (ideal.is_zero()) {
      text << "ideal   zero (k > nu); reg 1 by convention\n";
    } else {
      text << "ideal   " << ideal.size() << (ideal.size() == 1 ? " generator" : " generators") << " of degree "
           << 2 * k << '\n';
    }
    text << "reg     " << b.reg << '\n'
         << "pd      " << b.pd_quotient << '\n'
         << "depth   " << b.depth_quotient << '\n'
         << "dim     " << b.krull_dim_quotient << '\n'
         << "cm      " << (b.is_cm ? "yes" : "no") << '\n'
         << "linear  " << (ideal.is_zero() ? "n/a" : b.linear_resolution ? "yes" : "no") << '\n';
    if (a.common.timing) text << "time    " << elapsed << "s\n";
    if (a.betti && !ideal.is_zero()) text << '\n' << table.to_text();
  }

  if (!a.common.json_path.empty()) write_output(a.common.json_path, report.dump(2) + "\n");
  if (!a.common.csv_path.empty()) write_output(a.common.csv_path, csv);
  if (a.common.json_path != "-" && a.common.csv_path != "-") std::cout << text.str();
  return 0;
}

// verify

struct VerifyArgs {
  Common common;
  std::string family;
  std::string n_range;
  std::string m_range;
  std::string r_choices = "1,2";
  std::string invariants = "reg";
  int k = 0;
  bool all_k = false;
  int max_tree_vertices = 0;
  int aim_edge_cap = kAdmissibleEdgeCap;
  int confirm_every = 0;
  std::string checkpoint;
};

std::vector<Family> verify_families(const VerifyArgs& a) {
  if (a.family.find(':') != std::string::npos) return {parse_family(a.family)};
  Range range = parse_range(a.family == "path" || a.family == "cycle" ? a.n_range : a.m_range);
  if (a.family == "cmforest" && a.max_tree_vertices > 0) range = {1, a.max_tree_vertices};
  if (!range.set()) {
    throw InvalidParameter(a.family == "path" || a.family == "cycle" ? "give --n lo..hi"
                           : a.family == "cmforest"                  ? "give --m lo..hi or --max-tree-vertices M"
                                                                     : "give --m lo..hi");
  }
  return family_instances(a.family, range.lo, range.hi, parse_list(a.r_choices));
}

int run_verify_cmd(const VerifyArgs& a) {
  const std::vector<Family> families = verify_families(a);
  std::vector<SweepCase> sweep;
  if (a.k > 0 && !a.all_k) {
    for (const Family& f : families) sweep.push_back({f, a.k});
  } else {
    sweep = all_k(families);
  }
  HarnessConfig cfg = harness_config(a.common, a.checkpoint, a.confirm_every);
  cfg.aim_edge_cap = a.aim_edge_cap;
  return emit_report(run_verify(sweep, parse_invariants(a.invariants), cfg), a.common);
}

// scan

struct ScanArgs {
  Common common;
  std::string conjecture;
  std::string n_range;
  std::string m_range;
  std::string checkpoint;
  int confirm_every = 0;
};

int run_scan_cmd(const ScanArgs& a) {
  const Conjecture c = parse_conjecture(a.conjecture);
  Range range = parse_range(c == Conjecture::CycleDepth ? a.n_range : a.m_range);
  if (!range.set()) range = c == Conjecture::CycleDepth ? Range{4, 12} : Range{3, 6};
  const HarnessConfig cfg = harness_config(a.common, a.checkpoint, a.confirm_every);
  return emit_report(run_scan(c, conjecture_sweep(c, range.lo, range.hi), cfg), a.common);
}

// identities

struct IdentityArgs {
  int trials = 200;
  std::uint64_t seed = 1;
  int max_vertices = 10;
  int characteristic = kDefaultCharacteristic;
  std::string json_path;
};

int run_identities_cmd(const IdentityArgs& a) {
  IdentityConfig cfg;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.max_vertices = a.max_vertices;
  cfg.field = FieldSpec::of(a.characteristic);
  const IdentityReport report = run_identities(cfg);
  if (!a.json_path.empty()) write_output(a.json_path, report.to_json());
  if (a.json_path != "-") std::cout << report.to_text();
  return report.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables and invariants of square-free powers of edge ideals"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Invariants and Betti table of I(G)^[k]");
  c->add_option("target", compute.target, "Family descriptor: path:N, cycle:N, wpath:M, wcycle:M, mwcycle:M:R, "
                                          "mwpath:M:r1,..,rM, cmforest:[M:]u-v,...");
  c->add_option("--edges", compute.edges_path, "Edge-list file, one 'u v' per line");
  c->add_option("--k", compute.k, "Matching power");
  c->add_flag("--all-k", compute.all_k, "Every k from 1 to nu");
  c->add_flag("--betti", compute.betti, "Print the Betti diagram");
  add_common(c, compute.common);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check proven formulas against computation");
  v->add_option("family", verify.family, "path, cycle, wpath, wcycle, mwpath, mwcycle, cmforest, or a descriptor")
      ->required();
  v->add_option("--n", verify.n_range, "Vertex range for path and cycle, e.g. 2..10");
  v->add_option("--m", verify.m_range, "Base size range for whiskered families and forests");
  v->add_option("--r", verify.r_choices, "Pendant counts (mwcycle) or whisker multiplicities (mwpath)")
      ->capture_default_str();
  v->add_option("--max-tree-vertices", verify.max_tree_vertices, "cmforest: every forest on up to M vertices");
  v->add_option("--k", verify.k, "Single matching power instead of every k");
  v->add_flag("--all-k", verify.all_k, "Every k from 1 to nu (default)");
  v->add_option("--invariant", verify.invariants, "Comma list of reg, depth, cm, linear, aim")->capture_default_str();
  v->add_option("--aim-edge-cap", verify.aim_edge_cap, "Largest edge count for the aim search")->capture_default_str();
  v->add_option("--confirm-every", verify.confirm_every, "Recompute every n-th case over Q and compare");
  v->add_option("--checkpoint", verify.checkpoint, "JSONL file of finished cases, reused on rerun");
  add_common(v, verify.common);

  ScanArgs scan;
  auto* s = app.add_subcommand("scan", "Test a conjecture over a range");
  s->add_option("conjecture", scan.conjecture, "cycle-depth (6.1), wcycle-reg (6.2), wcycle-depth (6.3)")->required();
  s->add_option("--n", scan.n_range, "Cycle lengths for cycle-depth (default 4..12)");
  s->add_option("--m", scan.m_range, "Cycle lengths for the whiskered scans (default 3..6)");
  s->add_option("--checkpoint", scan.checkpoint, "JSONL file of finished cases, reused on rerun");
  s->add_option("--confirm-every", scan.confirm_every, "Recompute every n-th case over Q and compare");
  add_common(s, scan.common);

  IdentityArgs ident;
  auto* id = app.add_subcommand("identities", "Randomized checks of the colon, sum, regularity and depth identities");
  id->add_option("--trials", ident.trials, "Cases per suite")->capture_default_str();
  id->add_option("--seed", ident.seed, "Base seed")->capture_default_str();
  id->add_option("--max-n", ident.max_vertices, "Largest random graph")->capture_default_str();
  id->add_option("--char", ident.characteristic, "Field characteristic")->capture_default_str();
  id->add_option("--json", ident.json_path, "Write a JSON report to this path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c->parsed()) return run_compute(compute);
    if (v->parsed()) return run_verify_cmd(verify);
    if (s->parsed()) return run_scan_cmd(scan);
    return run_identities_cmd(ident);
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}

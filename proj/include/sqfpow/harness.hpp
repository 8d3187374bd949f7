#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqfpow/families.hpp"
#include "sqfpow/formulas.hpp"
#include "sqfpow/rank.hpp"

namespace sqfpow {

enum class Invariant { Reg, Depth, CM, Linear, Aim };
enum class CaseStatus { Pass, Fail, BoundOk, Skipped, CounterexampleCandidate };
enum class Conjecture { CycleDepth, WhiskeredCycleReg, WhiskeredCycleDepth };

std::string to_string(Invariant inv);
std::string to_string(CaseStatus status);
std::string to_string(Conjecture c);
/// Comma-separated names: reg, depth, cm, linear, aim.
std::vector<Invariant> parse_invariants(std::string_view text);
/// cycle-depth, wcycle-reg, wcycle-depth, or the aliases 6.1, 6.2, 6.3.
Conjecture parse_conjecture(std::string_view text);

struct SweepCase {
  Family family;
  int k = 1;
};

struct CaseResult {
  std::string family;
  int k = 0;
  std::string invariant;
  PredictionResult predicted;
  std::optional<int> computed;
  CaseStatus status = CaseStatus::Skipped;
  std::string note;
  double elapsed_seconds = 0.0;
};

struct HarnessConfig {
  FieldSpec field;
  /// Cases run concurrently; each Betti computation stays single-threaded.
  int threads = 1;
  /// Largest vertex count for a full Betti computation.
  int max_n = 18;
  int aim_edge_cap = kAdmissibleEdgeCap;
  /// Every n-th case is recomputed at characteristic 0 and compared; 0 = off.
  int confirm_every = 0;
  bool timing = false;
  std::string checkpoint_path;
};

inline constexpr int kDefaultMaxN = 18;

struct VerificationReport {
  std::string command;
  HarnessConfig config;
  std::vector<CaseResult> cases;

  std::map<std::string, int> summary() const;
  /// 2 on any proven failure, else 3 on any counterexample candidate, else 0.
  int exit_code() const;
  std::string to_json() const;
  std::string to_table() const;
  std::string to_csv() const;
};

/// Compares proven predictions for each requested invariant against
/// computation.
VerificationReport run_verify(const std::vector<SweepCase>& sweep, const std::vector<Invariant>& invariants,
                              const HarnessConfig& config);

/// Compares the conjectured value against computation; mismatches are
/// counterexample candidates.
VerificationReport run_scan(Conjecture conjecture, const std::vector<SweepCase>& sweep, const HarnessConfig& config);

/// Cases a conjecture scan covers for the given size range.
std::vector<SweepCase> conjecture_sweep(Conjecture conjecture, int lo, int hi);

/// Every (family instance, k) pair with 1 <= k <= nu.
std::vector<SweepCase> all_k(const std::vector<Family>& families);

}  // namespace sqfpow

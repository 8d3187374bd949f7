#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqfpow/graphs.hpp"
#include "sqfpow/rank.hpp"

namespace sqfpow {

struct IdentityCase {
  std::uint64_t seed = 0;
  /// Everything needed to rebuild the instance by hand.
  std::string reproducer;
  bool ok = true;
  std::string detail;
};

struct IdentitySuite {
  std::string name;
  std::vector<IdentityCase> cases;

  int failures() const;
};

struct IdentityConfig {
  int trials = 200;
  std::uint64_t seed = 1;
  int max_vertices = 10;
  FieldSpec field;
};

struct IdentityReport {
  std::uint64_t seed = 0;
  std::vector<IdentitySuite> suites;

  bool ok() const;
  std::string to_text() const;
  std::string to_json() const;
};

IdentityReport run_identities(const IdentityConfig& config);

/// Deterministic random graph on 2..max_vertices vertices.
Graph random_graph(std::uint64_t seed, int max_vertices);

}  // namespace sqfpow

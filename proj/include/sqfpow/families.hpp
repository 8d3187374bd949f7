#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sqfpow/graphs.hpp"

namespace sqfpow {

enum class FamilyKind { Path, Cycle, WhiskeredPath, WhiskeredCycle, MultiWhiskeredPath, MultiWhiskeredCycle, CMForest, Custom };

/// A named graph family instance, e.g. "cycle:13" or "mwcycle:5:2".
struct Family {
  FamilyKind kind = FamilyKind::Custom;
  /// n for path/cycle, m otherwise.
  int size = 0;
  /// mwpath whisker multiplicities, one per path vertex.
  std::vector<int> multiplicities;
  /// mwcycle pendant count at x1.
  int pendants = 1;
  /// cmforest: edges of the underlying forest T on vertices 0..m-1.
  std::vector<Edge> forest_edges;
  /// Custom graphs only.
  Graph custom;
  std::string custom_name;

  Graph graph() const;
  std::string descriptor() const;
  /// Forest families where regularity equals aim + k.
  bool is_forest() const;
};

/// Parses path:N, cycle:N, wpath:M, wcycle:M, mwcycle:M:R,
/// mwpath:M:R1,..,RM and cmforest:[M:]u-v,... (1-based forest vertices).
/// Throws ParseError on malformed text and InvalidParameter on bad values.
Family parse_family(std::string_view text);

Family path_family(int n);
Family cycle_family(int n);
Family whiskered_path_family(int m);
Family whiskered_cycle_family(int m);
Family multi_whiskered_path_family(std::vector<int> multiplicities);
Family multi_whiskered_cycle_family(int m, int r);
Family cm_forest_family(int m, std::vector<Edge> forest_edges);
Family custom_family(Graph g, std::string name);

/// Every instance of a family kind ("path", "cycle", "wpath", "wcycle",
/// "mwpath", "mwcycle", "cmforest") with size lo..hi. `choices` are the
/// pendant counts for mwcycle and the per-vertex multiplicities for mwpath.
std::vector<Family> family_instances(std::string_view kind, int lo, int hi, const std::vector<int>& choices = {1, 2});

}  // namespace sqfpow

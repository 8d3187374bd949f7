#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqfpow/bits.hpp"

namespace sqfpow {

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Mask support() const { return bit(u) | bit(v); }
  auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph on dense vertices 0..n-1. Labels are display-only.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidParameter on loops, out-of-range endpoints or n > 64.
  /// Missing labels default to x1..xn.
  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(adjacency_.size()); }
  Mask vertices() const { return low_mask(size()); }
  Mask neighbors(Vertex v) const { return adjacency_.at(v); }
  Mask closed_neighbors(Vertex v) const { return adjacency_.at(v) | bit(v); }
  int degree(Vertex v) const { return popcount(adjacency_.at(v)); }
  bool has_edge(Vertex a, Vertex b) const;

  /// Sorted lexicographically.
  std::vector<Edge> edges() const;
  int edge_count() const;
  /// Edges with both endpoints in `subset`.
  std::vector<Edge> edges_within(Mask subset) const;

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find_label(std::string_view name) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<Mask> adjacency_;
  std::vector<std::string> labels_;
};

using Matching = std::vector<Edge>;

Mask support(const Matching& matching);

/// Ordered blocks M_1..M_r of a k-admissible matching.
struct AdmissibleWitness {
  std::vector<Matching> blocks;

  Matching matching() const;
};

struct AdmissibleResult {
  int value = 0;
  std::optional<AdmissibleWitness> witness;
};

// Named families. Vertex order: path/cycle vertices first, pendants after.
Graph path(int n);
Graph cycle(int n);
Graph whisker(const Graph& g);
Graph multi_whiskered_path(int m, std::span<const int> multiplicities);
/// Cycle x1..xm, whiskers y_j at x_j for j >= 2, and r pendants z_1..z_r at x1.
Graph multi_whiskered_cycle(int m, int r);
Graph complement(const Graph& g);

/// One "u v" pair per line; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Induced graph on V(g) \ removed, re-indexed densely, labels retained.
Graph delete_vertices(const Graph& g, Mask removed);
Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);
/// Same vertex set, but every edge touching `removed` is dropped. Keeps
/// indices aligned with g so ideals live in the same ambient ring.
Graph isolate_vertices(const Graph& g, Mask removed);
Graph induced_subgraph(const Graph& g, Mask kept);

bool is_matching(const Graph& g, const Matching& m);
std::vector<Matching> enumerate_k_matchings(const Graph& g, int k);
int matching_number(const Graph& g);
/// Size of a largest matching A with E(G[V(A)]) = A.
int induced_matching_number(const Graph& g);
/// True when e and f are disjoint edges with no edge of g joining them.
bool is_gap(const Graph& g, const Edge& e, const Edge& f);
bool is_forest(const Graph& g, Mask subset);
bool is_forest(const Graph& g);
bool is_chordal(const Graph& g);

inline constexpr int kAdmissibleEdgeCap = 16;

/// aim(G, k) with a witnessing block structure. Requires 1 <= k <= nu(g)
/// and |E(g)| <= kAdmissibleEdgeCap unless `edge_cap` is raised.
AdmissibleResult admissible_matching_number(const Graph& g, int k,
                                            int edge_cap = kAdmissibleEdgeCap);

/// Checks every defining condition of a k-admissible matching directly.
/// Returns a description of the first violated condition, or nullopt.
std::optional<std::string> check_admissible_witness(const Graph& g,
                                                    const AdmissibleWitness& w, int k);

/// Forests on m vertices, one per isomorphism class, as edge lists.
std::vector<std::vector<Edge>> enumerate_forests(int m);

}  // namespace sqfpow

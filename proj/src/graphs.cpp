#include "sqfpow/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sqfpow/errors.hpp"

namespace sqfpow {

namespace {

std::string default_label(Vertex v) { return "x" + std::to_string(v + 1); }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (n < 0 || n > kMaxVariables) {
    throw InvalidParameter("graph size must be in [0, 64], got " + std::to_string(n));
  }
  adjacency_.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InvalidParameter("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) throw InvalidParameter("edge endpoint out of range");
    adjacency_[e.u] |= bit(e.v);
    adjacency_[e.v] |= bit(e.u);
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (Vertex v = 0; v < n; ++v) labels.push_back(default_label(v));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw InvalidParameter("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= size() || b >= size()) return false;
  return contains(adjacency_[a], b);
}

std::vector<Edge> Graph::edges() const { return edges_within(vertices()); }

std::vector<Edge> Graph::edges_within(Mask subset) const {
  std::vector<Edge> out;
  for_each_bit(subset, [&](Vertex u) {
    for_each_bit(adjacency_[u] & subset & ~low_mask(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  });
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (Mask m : adjacency_) twice += popcount(m);
  return twice / 2;
}

std::optional<Vertex> Graph::find_label(std::string_view name) const {
  for (Vertex v = 0; v < size(); ++v) {
    if (labels_[v] == name) return v;
  }
  return std::nullopt;
}

Mask support(const Matching& matching) {
  Mask m = 0;
  for (const Edge& e : matching) m |= e.support();
  return m;
}

Matching AdmissibleWitness::matching() const {
  Matching out;
  for (const Matching& b : blocks) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

Graph path(int n) {
  if (n < 1) throw InvalidParameter("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw InvalidParameter("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph whisker(const Graph& g) {
  const int n = g.size();
  std::vector<Edge> edges = g.edges();
  std::vector<std::string> labels = g.labels();
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(v, n + v);
    const std::string& base = g.label(v);
    labels.push_back(!base.empty() && base[0] == 'x' ? "y" + base.substr(1) : base + "'");
  }
  return Graph(2 * n, edges, std::move(labels));
}

Graph multi_whiskered_path(int m, std::span<const int> multiplicities) {
  if (m < 1) throw InvalidParameter("whiskered path needs m >= 1");
  if (static_cast<int>(multiplicities.size()) != m) {
    throw InvalidParameter("expected one whisker multiplicity per path vertex");
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < m; ++i) labels.push_back(default_label(i));
  for (Vertex i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  Vertex next = m;
  for (Vertex i = 0; i < m; ++i) {
    if (multiplicities[i] < 1) throw InvalidParameter("whisker multiplicities must be >= 1");
    for (int j = 0; j < multiplicities[i]; ++j) {
      edges.emplace_back(i, next++);
      labels.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  }
  return Graph(next, edges, std::move(labels));
}

Graph multi_whiskered_cycle(int m, int r) {
  if (m < 3) throw InvalidParameter("whiskered cycle needs m >= 3");
  if (r < 1) throw InvalidParameter("pendant count r must be >= 1");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < m; ++i) labels.push_back(default_label(i));
  for (Vertex i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, m - 1);
  Vertex next = m;
  for (Vertex i = 1; i < m; ++i) {
    edges.emplace_back(i, next++);
    labels.push_back("y" + std::to_string(i + 1));
  }
  for (int j = 0; j < r; ++j) {
    edges.emplace_back(0, next++);
    labels.push_back("z" + std::to_string(j + 1));
  }
  return Graph(next, edges, std::move(labels));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.size(), edges, g.labels());
}

Graph parse_edge_list(std::string_view text) {
  std::map<std::string, Vertex, std::less<>> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto vertex_of = [&](std::string_view token) {
    auto it = index.find(token);
    if (it != index.end()) return it->second;
    if (static_cast<int>(labels.size()) >= kMaxVariables) {
      throw CapExceeded("edge list mentions more than 64 vertices");
    }
    const auto v = static_cast<Vertex>(labels.size());
    index.emplace(std::string(token), v);
    labels.emplace_back(token);
    return v;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex tokens");
    if (tokens[0] == tokens[1]) throw ParseError(line_no, "loop edge " + std::string(tokens[0]));
    const Vertex a = vertex_of(tokens[0]);
    const Vertex b = vertex_of(tokens[1]);
    edges.emplace_back(a, b);
    if (end == text.size()) break;
  }
  const int n = static_cast<int>(labels.size());
  return Graph(n, edges, std::move(labels));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

Graph induced_subgraph(const Graph& g, Mask kept) {
  if (!is_subset(kept, g.vertices())) throw InvalidParameter("unknown vertex in subset");
  std::vector<Vertex> new_index(g.size(), -1);
  std::vector<std::string> labels;
  for_each_bit(kept, [&](Vertex v) {
    new_index[v] = static_cast<Vertex>(labels.size());
    labels.push_back(g.label(v));
  });
  std::vector<Edge> edges;
  for (const Edge& e : g.edges_within(kept)) edges.emplace_back(new_index[e.u], new_index[e.v]);
  const int n = static_cast<int>(labels.size());
  return Graph(n, edges, std::move(labels));
}

Graph delete_vertices(const Graph& g, Mask removed) {
  if (!is_subset(removed, g.vertices())) throw InvalidParameter("unknown vertex in deletion set");
  return induced_subgraph(g, g.vertices() & ~removed);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  for (Vertex v : removed) {
    if (v < 0 || v >= g.size()) throw InvalidParameter("unknown vertex " + std::to_string(v));
  }
  return delete_vertices(g, from_indices(removed));
}

Graph isolate_vertices(const Graph& g, Mask removed) {
  if (!is_subset(removed, g.vertices())) throw InvalidParameter("unknown vertex in deletion set");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if ((e.support() & removed) == 0) edges.push_back(e);
  }
  return Graph(g.size(), edges, g.labels());
}

bool is_matching(const Graph& g, const Matching& m) {
  Mask used = 0;
  for (const Edge& e : m) {
    if (!g.has_edge(e.u, e.v) || (used & e.support()) != 0) return false;
    used |= e.support();
  }
  return true;
}

namespace {

void extend_matchings(const std::vector<Edge>& edges, std::size_t from, int remaining, Mask used,
                      Matching& current, std::vector<Matching>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i + remaining <= edges.size(); ++i) {
    if ((edges[i].support() & used) != 0) continue;
    current.push_back(edges[i]);
    extend_matchings(edges, i + 1, remaining - 1, used | edges[i].support(), current, out);
    current.pop_back();
  }
}

int max_matching(const Graph& g, Mask available, std::map<Mask, int>& memo) {
  // Drop vertices with no available neighbour; they never get matched.
  Mask active = 0;
  for_each_bit(available, [&](Vertex v) {
    if ((g.neighbors(v) & available) != 0) active |= bit(v);
  });
  if (active == 0) return 0;
  if (auto it = memo.find(active); it != memo.end()) return it->second;
  const Vertex v = std::countr_zero(active);
  int best = max_matching(g, active & ~bit(v), memo);
  for_each_bit(g.neighbors(v) & active, [&](Vertex u) {
    best = std::max(best, 1 + max_matching(g, active & ~bit(v) & ~bit(u), memo));
  });
  memo.emplace(active, best);
  return best;
}

int max_induced_matching(const Graph& g, const std::vector<Edge>& edges, std::size_t from,
                         Mask blocked) {
  int best = 0;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if ((e.support() & blocked) != 0) continue;
    const Mask closed = g.closed_neighbors(e.u) | g.closed_neighbors(e.v);
    best = std::max(best, 1 + max_induced_matching(g, edges, i + 1, blocked | closed));
  }
  return best;
}

}  // namespace

std::vector<Matching> enumerate_k_matchings(const Graph& g, int k) {
  std::vector<Matching> out;
  if (k < 0) return out;
  const std::vector<Edge> edges = g.edges();
  Matching current;
  extend_matchings(edges, 0, k, 0, current, out);
  return out;
}

int matching_number(const Graph& g) {
  std::map<Mask, int> memo;
  return max_matching(g, g.vertices(), memo);
}

int induced_matching_number(const Graph& g) {
  return max_induced_matching(g, g.edges(), 0, 0);
}

bool is_gap(const Graph& g, const Edge& e, const Edge& f) {
  if ((e.support() & f.support()) != 0) return false;
  if (!g.has_edge(e.u, e.v) || !g.has_edge(f.u, f.v)) return false;
  return ((g.neighbors(e.u) | g.neighbors(e.v)) & f.support()) == 0;
}

bool is_forest(const Graph& g, Mask subset) {
  std::vector<Vertex> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges_within(subset)) {
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_forest(const Graph& g) { return is_forest(g, g.vertices()); }

bool is_chordal(const Graph& g) {
  Mask remaining = g.vertices();
  while (remaining != 0) {
    bool removed = false;
    for_each_bit(remaining, [&](Vertex v) {
      if (removed) return;
      const Mask nbrs = g.neighbors(v) & remaining;
      bool clique = true;
      for_each_bit(nbrs, [&](Vertex u) {
        if (!is_subset(nbrs & ~bit(u), g.neighbors(u))) clique = false;
      });
      if (clique) {
        remaining &= ~bit(v);
        removed = true;
      }
    });
    if (!removed) return false;
  }
  return true;
}

namespace {

// Blocks of M are forced to be unions of connected components of the
// "joined by an edge of g" relation; the finest such partition is the only
// candidate worth testing since merging blocks never helps.
std::optional<AdmissibleWitness> admissible_blocks(const Graph& g, const Matching& m, int k) {
  const std::size_t s = m.size();
  std::vector<int> component(s, -1);
  int count = 0;
  for (std::size_t i = 0; i < s; ++i) {
    if (component[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    component[i] = count;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      const Mask reach = g.neighbors(m[a].u) | g.neighbors(m[a].v);
      for (std::size_t b = 0; b < s; ++b) {
        if (component[b] < 0 && (reach & m[b].support()) != 0) {
          component[b] = count;
          stack.push_back(b);
        }
      }
    }
    ++count;
  }
  if (static_cast<int>(s) > count + k - 1) return std::nullopt;
  AdmissibleWitness w;
  w.blocks.resize(count);
  for (std::size_t i = 0; i < s; ++i) w.blocks[component[i]].push_back(m[i]);
  for (const Matching& block : w.blocks) {
    if (!is_forest(g, support(block))) return std::nullopt;
  }
  return w;
}

}  // namespace

AdmissibleResult admissible_matching_number(const Graph& g, int k, int edge_cap) {
  const int nu = matching_number(g);
  if (k < 1 || k > nu) {
    throw InvalidParameter("aim needs 1 <= k <= nu(G) = " + std::to_string(nu));
  }
  if (g.edge_count() > edge_cap) {
    throw CapExceeded("aim search limited to " + std::to_string(edge_cap) + " edges");
  }
  for (int size = nu; size >= 1; --size) {
    for (const Matching& m : enumerate_k_matchings(g, size)) {
      if (auto w = admissible_blocks(g, m, k)) return {size, std::move(w)};
    }
  }
  return {0, std::nullopt};
}

std::optional<std::string> check_admissible_witness(const Graph& g, const AdmissibleWitness& w,
                                                    int k) {
  if (w.blocks.empty()) return "witness has no blocks";
  std::vector<Edge> all;
  for (const Matching& block : w.blocks) {
    if (block.empty()) return "empty block";
    all.insert(all.end(), block.begin(), block.end());
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!g.has_edge(all[i].u, all[i].v)) return "block edge is not an edge of the graph";
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) return "blocks are not disjoint";
      if ((all[i].support() & all[j].support()) != 0) return "edges share a vertex";
    }
  }
  for (std::size_t a = 0; a < w.blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < w.blocks.size(); ++b) {
      for (const Edge& e : w.blocks[a]) {
        for (const Edge& f : w.blocks[b]) {
          // Gap: no edge of g between any endpoint of e and any endpoint of f.
          for (Vertex x : {e.u, e.v}) {
            for (Vertex y : {f.u, f.v}) {
              if (g.has_edge(x, y)) return "edges in different blocks do not form a gap";
            }
          }
        }
      }
    }
  }
  const auto r = static_cast<long>(w.blocks.size());
  long total = 0;
  for (const Matching& block : w.blocks) total += static_cast<long>(block.size());
  if (total > r + k - 1) return "block sizes are not k-admissible";
  for (const Matching& block : w.blocks) {
    // Union-find over the induced edges of the block's vertex set.
    std::vector<Vertex> verts;
    for (const Edge& e : block) {
      verts.push_back(e.u);
      verts.push_back(e.v);
    }
    std::map<Vertex, Vertex> parent;
    for (Vertex v : verts) parent[v] = v;
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        if (!g.has_edge(verts[i], verts[j])) continue;
        const Vertex a = find(verts[i]);
        const Vertex b = find(verts[j]);
        if (a == b) return "induced subgraph on a block contains a cycle";
        parent[a] = b;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Edge>> enumerate_forests(int m) {
  if (m < 1 || m > 6) throw InvalidParameter("forest enumeration supports 1 <= m <= 6");
  std::vector<Edge> slots;
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = u + 1; v < m; ++v) slots.emplace_back(u, v);
  }
  std::vector<Vertex> perm(m);
  std::vector<std::uint32_t> seen;
  std::vector<std::vector<Edge>> out;
  const std::uint32_t total = 1U << slots.size();
  for (std::uint32_t set = 0; set < total; ++set) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((set >> i) & 1U) edges.push_back(slots[i]);
    }
    if (!is_forest(Graph(m, edges))) continue;
    // Canonical form: smallest slot-set over all relabelings.
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t canonical = set;
    do {
      std::uint32_t image = 0;
      for (const Edge& e : edges) {
        const Edge f(perm[e.u], perm[e.v]);
        const auto idx = std::find(slots.begin(), slots.end(), f) - slots.begin();
        image |= 1U << idx;
      }
      canonical = std::min(canonical, image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (canonical != set) continue;
    seen.push_back(set);
    out.push_back(std::move(edges));
  }
  return out;
}

}  // namespace sqfpow

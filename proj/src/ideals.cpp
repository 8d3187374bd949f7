#include "sqfpow/ideals.hpp"

#include <algorithm>
#include <sstream>

#include "sqfpow/errors.hpp"

namespace sqfpow {

namespace {

bool canonical_less(Mask a, Mask b) {
  const int da = popcount(a);
  const int db = popcount(b);
  if (da != db) return da < db;
  return lex_less(a, b);
}

void require_same_ring(const SqfIdeal& a, const SqfIdeal& b) {
  if (a.ambient() != b.ambient()) throw InvalidParameter("ideals live in different rings");
}

Mask edge_support(const Graph& g, Vertex x, Vertex y) {
  if (!g.has_edge(x, y)) throw InvalidParameter("{x,y} is not an edge");
  return bit(x) | bit(y);
}

void require_vertex(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.size()) throw InvalidParameter("unknown vertex " + std::to_string(x));
}

}  // namespace

SqfIdeal::SqfIdeal(int ambient, std::vector<Mask> gens) : ambient_(ambient) {
  if (ambient < 0 || ambient > kMaxVariables) throw InvalidParameter("ambient ring size out of range");
  const Mask ring = low_mask(ambient);
  for (Mask g : gens) {
    if (!is_subset(g, ring)) throw InvalidParameter("generator uses a variable outside the ring");
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Mask g : gens) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                       [g](Mask kept) { return is_subset(kept, g); });
    if (!redundant) gens_.push_back(g);
  }
}

SqfIdeal SqfIdeal::variables(int ambient, Mask vars) {
  std::vector<Mask> gens;
  for_each_bit(vars, [&](Vertex v) { gens.push_back(bit(v)); });
  return SqfIdeal(ambient, std::move(gens));
}

bool SqfIdeal::contains(Mask monomial) const {
  return std::any_of(gens_.begin(), gens_.end(), [monomial](Mask g) { return is_subset(g, monomial); });
}

Mask SqfIdeal::support() const {
  Mask m = 0;
  for (Mask g : gens_) m |= g;
  return m;
}

int SqfIdeal::min_degree() const {
  if (gens_.empty()) throw InvalidParameter("zero ideal has no generator degree");
  return popcount(gens_.front());
}

int SqfIdeal::max_degree() const {
  if (gens_.empty()) throw InvalidParameter("zero ideal has no generator degree");
  return popcount(gens_.back());
}

std::string SqfIdeal::to_string(const std::vector<std::string>& labels) const {
  if (is_zero()) return "<0>";
  if (is_unit()) return "<1>";
  std::ostringstream out;
  out << '<';
  bool first_gen = true;
  for (Mask g : gens_) {
    if (!first_gen) out << ", ";
    first_gen = false;
    bool first_var = true;
    for_each_bit(g, [&](Vertex v) {
      if (!first_var) out << '*';
      first_var = false;
      if (static_cast<std::size_t>(v) < labels.size()) {
        out << labels[v];
      } else {
        out << 'x' << v + 1;
      }
    });
  }
  out << '>';
  return out.str();
}

SqfIdeal minimalize(int ambient, std::vector<Mask> gens) { return SqfIdeal(ambient, std::move(gens)); }

SqfIdeal edge_ideal(const Graph& g) {
  std::vector<Mask> gens;
  for (const Edge& e : g.edges()) gens.push_back(e.support());
  return SqfIdeal(g.size(), std::move(gens));
}

SqfIdeal sqf_power(const Graph& g, int k) {
  if (k < 0) throw InvalidParameter("k must be nonnegative");
  if (k == 0) return SqfIdeal::unit(g.size());
  std::vector<Mask> gens;
  for (const Matching& m : enumerate_k_matchings(g, k)) gens.push_back(support(m));
  return SqfIdeal(g.size(), std::move(gens));
}

namespace {

void disjoint_products(const std::vector<Mask>& gens, std::size_t from, int remaining, Mask used,
                       std::vector<Mask>& out) {
  if (remaining == 0) {
    out.push_back(used);
    return;
  }
  for (std::size_t i = from; i < gens.size(); ++i) {
    if ((gens[i] & used) != 0) continue;
    disjoint_products(gens, i + 1, remaining - 1, used | gens[i], out);
  }
}

}  // namespace

SqfIdeal sqf_power_bruteforce(const SqfIdeal& ideal, int k) {
  if (k < 0) throw InvalidParameter("k must be nonnegative");
  if (k == 0) return SqfIdeal::unit(ideal.ambient());
  std::vector<Mask> out;
  disjoint_products(ideal.gens(), 0, k, 0, out);
  return SqfIdeal(ideal.ambient(), std::move(out));
}

SqfIdeal colon(const SqfIdeal& ideal, Mask monomial) {
  if (!is_subset(monomial, low_mask(ideal.ambient()))) {
    throw InvalidParameter("monomial uses a variable outside the ring");
  }
  std::vector<Mask> gens;
  gens.reserve(ideal.size());
  for (Mask g : ideal.gens()) gens.push_back(g & ~monomial);
  return SqfIdeal(ideal.ambient(), std::move(gens));
}

SqfIdeal add(const SqfIdeal& a, const SqfIdeal& b) {
  require_same_ring(a, b);
  std::vector<Mask> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return SqfIdeal(a.ambient(), std::move(gens));
}

SqfIdeal add_variables(const SqfIdeal& ideal, Mask vars) {
  return add(ideal, SqfIdeal::variables(ideal.ambient(), vars));
}

SqfIdeal multiply(const SqfIdeal& ideal, Mask monomial) {
  std::vector<Mask> gens;
  gens.reserve(ideal.size());
  for (Mask g : ideal.gens()) gens.push_back(g | monomial);
  return SqfIdeal(ideal.ambient(), std::move(gens));
}

bool equals(const SqfIdeal& a, const SqfIdeal& b) {
  require_same_ring(a, b);
  return a == b;
}

SqfIdeal extend_ambient(const SqfIdeal& ideal, int ambient) {
  if (ambient < ideal.ambient()) throw InvalidParameter("cannot shrink the ambient ring");
  return SqfIdeal(ambient, ideal.gens());
}

IdealPair colon_identity_delete(const Graph& g, int k, Vertex x) {
  require_vertex(g, x);
  const SqfIdeal left = add_variables(sqf_power(g, k), bit(x));
  const SqfIdeal right = add_variables(sqf_power(isolate_vertices(g, bit(x)), k), bit(x));
  return {left, right};
}

IdealPair colon_identity_vertex(const Graph& g, int k, Vertex x) {
  require_vertex(g, x);
  if (k < 1) throw InvalidParameter("k must be positive");
  const SqfIdeal left = colon(sqf_power(g, k), bit(x));
  SqfIdeal right = sqf_power(isolate_vertices(g, g.closed_neighbors(x)), k);
  for_each_bit(g.neighbors(x), [&](Vertex y) {
    const SqfIdeal part = sqf_power(isolate_vertices(g, bit(x) | bit(y)), k - 1);
    right = add(right, multiply(part, bit(y)));
  });
  return {left, right};
}

namespace {

Graph rewired(const Graph& g, Mask removed, Mask side_a, Mask side_b) {
  std::vector<Edge> edges = isolate_vertices(g, removed).edges();
  for_each_bit(side_a, [&](Vertex a) {
    for_each_bit(side_b, [&](Vertex b) {
      if (a != b) edges.emplace_back(a, b);
    });
  });
  return Graph(g.size(), edges, g.labels());
}

IdealPair edge_colon(const Graph& g, int k, Vertex x, Vertex y, bool rewire_at_x) {
  const Mask xy = edge_support(g, x, y);
  if (k < 1) throw InvalidParameter("k must be positive");
  const SqfIdeal left = colon(sqf_power(g, k), xy);
  const Mask nx = g.neighbors(x) & ~xy;
  const Mask ny = g.neighbors(y) & ~xy;
  const Mask pivots = rewire_at_x ? nx : ny;
  if (pivots == 0) return {left, sqf_power(isolate_vertices(g, xy), k - 1)};
  SqfIdeal right = SqfIdeal::zero(g.size());
  for_each_bit(pivots, [&](Vertex p) {
    const Graph gi = rewire_at_x ? rewired(g, xy, bit(p), ny) : rewired(g, xy, nx, bit(p));
    right = add(right, sqf_power(gi, k - 1));
  });
  return {left, right};
}

}  // namespace

IdealPair colon_identity_edge(const Graph& g, int k, Vertex x, Vertex y) {
  return edge_colon(g, k, x, y, true);
}

IdealPair colon_identity_edge_alt(const Graph& g, int k, Vertex x, Vertex y) {
  return edge_colon(g, k, x, y, false);
}

IdealPair colon_identity_second_power(const Graph& g, Vertex x, Vertex y) {
  const Mask xy = edge_support(g, x, y);
  const SqfIdeal left = colon(sqf_power(g, 2), xy);
  const Graph joined = rewired(g, xy, g.neighbors(x) & ~xy, g.neighbors(y) & ~xy);
  return {left, edge_ideal(joined)};
}

IdealPair colon_identity_star(const Graph& g, int k, Vertex x) {
  require_vertex(g, x);
  std::vector<Mask> star;
  for_each_bit(g.neighbors(x), [&](Vertex y) { star.push_back(bit(x) | bit(y)); });
  const SqfIdeal left = colon(add(sqf_power(g, k), SqfIdeal(g.size(), star)), bit(x));
  const SqfIdeal right =
      add_variables(sqf_power(isolate_vertices(g, g.closed_neighbors(x)), k), g.neighbors(x));
  return {left, right};
}

IdealPair colon_identity_exchange(const SqfIdeal& ideal, Mask vars, Vertex xr) {
  if (contains(vars, xr)) throw InvalidParameter("x_r must not be among x_1..x_{r-1}");
  const SqfIdeal left = colon(add_variables(ideal, vars), bit(xr));
  const SqfIdeal right = add_variables(colon(ideal, bit(xr)), vars);
  return {left, right};
}

}  // namespace sqfpow

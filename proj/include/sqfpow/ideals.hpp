#pragma once

#include <string>
#include <vector>

#include "sqfpow/bits.hpp"
#include "sqfpow/graphs.hpp"

namespace sqfpow {

/// Square-free monomial ideal in K[x_0..x_{n-1}], stored as the supports of
/// its minimal generators. No generators is the zero ideal; a single empty
/// support is the unit ideal.
class SqfIdeal {
 public:
  SqfIdeal() = default;
  /// Minimalizes and sorts `gens`. Throws InvalidParameter when a support
  /// leaves the ambient ring.
  SqfIdeal(int ambient, std::vector<Mask> gens);

  static SqfIdeal zero(int ambient) { return SqfIdeal(ambient, {}); }
  static SqfIdeal unit(int ambient) { return SqfIdeal(ambient, {Mask{0}}); }
  /// <x_i : i in vars>
  static SqfIdeal variables(int ambient, Mask vars);

  int ambient() const { return ambient_; }
  const std::vector<Mask>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0] == 0; }
  bool is_proper() const { return !is_unit(); }

  /// Membership of the monomial x_m.
  bool contains(Mask monomial) const;
  /// Union of generator supports.
  Mask support() const;
  int min_degree() const;
  int max_degree() const;
  bool is_equigenerated() const { return min_degree() == max_degree(); }

  std::string to_string(const std::vector<std::string>& labels = {}) const;

  bool operator==(const SqfIdeal&) const = default;

 private:
  int ambient_ = 0;
  std::vector<Mask> gens_;
};

SqfIdeal minimalize(int ambient, std::vector<Mask> gens);

SqfIdeal edge_ideal(const Graph& g);
SqfIdeal sqf_power(const Graph& g, int k);
/// Square-free part of I^k read off products of k pairwise disjoint
/// generators. Independent of matchings; used to cross-check sqf_power.
SqfIdeal sqf_power_bruteforce(const SqfIdeal& ideal, int k);

SqfIdeal colon(const SqfIdeal& ideal, Mask monomial);
SqfIdeal add(const SqfIdeal& a, const SqfIdeal& b);
SqfIdeal add_variables(const SqfIdeal& ideal, Mask vars);
/// Multiplies every generator by x_m.
SqfIdeal multiply(const SqfIdeal& ideal, Mask monomial);
bool equals(const SqfIdeal& a, const SqfIdeal& b);

/// Extends an ideal to a larger ring by adding unused variables.
SqfIdeal extend_ambient(const SqfIdeal& ideal, int ambient);

struct IdealPair {
  SqfIdeal left;
  SqfIdeal right;
};

/// I(G)^[k] + <x> versus I(G \ x)^[k] + <x>.
IdealPair colon_identity_delete(const Graph& g, int k, Vertex x);
/// (I(G)^[k] : x) versus the sum over neighbours y of y I(G \ {x,y})^[k-1]
/// plus I(G \ N[x])^[k].
IdealPair colon_identity_vertex(const Graph& g, int k, Vertex x);
/// (I(G)^[k] : xy) versus the sum of I(G_i)^[k-1] over the rewired graphs
/// G_i, one per neighbour u_i != y of x. When x has no other neighbour the
/// rewiring family is empty and G \ {x,y} stands in for it.
IdealPair colon_identity_edge(const Graph& g, int k, Vertex x, Vertex y);
/// Same colon, summed over the graphs H_j rewired at the neighbours of y.
IdealPair colon_identity_edge_alt(const Graph& g, int k, Vertex x, Vertex y);
/// (I(G)^[2] : xy) versus the single edge ideal I(G').
IdealPair colon_identity_second_power(const Graph& g, Vertex x, Vertex y);
/// ((I(G)^[k] + <x y_1..x y_n>) : x) versus I(G \ {x,y_1..y_n})^[k] + <y_1..y_n>.
IdealPair colon_identity_star(const Graph& g, int k, Vertex x);
/// ((I + <x_1..x_{r-1}>) : x_r) versus (I : x_r) + <x_1..x_{r-1}>.
IdealPair colon_identity_exchange(const SqfIdeal& ideal, Mask vars, Vertex xr);

}  // namespace sqfpow

#include "doctest.h"
#include "sqfpow/errors.hpp"
#include "sqfpow/ideals.hpp"

using namespace sqfpow;

namespace {

Mask m(std::initializer_list<int> one_based) {
  Mask out = 0;
  for (int v : one_based) out |= bit(v - 1);
  return out;
}

}  // namespace

TEST_CASE("edge ideals") {
  const SqfIdeal p3 = edge_ideal(path(3));
  CHECK(p3.gens() == std::vector<Mask>{m({1, 2}), m({2, 3})});
  CHECK(p3.to_string() == "<x1*x2, x2*x3>");
  CHECK(edge_ideal(cycle(3)).size() == 3);
  CHECK(edge_ideal(Graph(4, {})).is_zero());
  CHECK(edge_ideal(Graph(4, {})).to_string() == "<0>");
}

TEST_CASE("square-free powers") {
  CHECK(sqf_power(path(4), 2).gens() == std::vector<Mask>{m({1, 2, 3, 4})});
  CHECK(sqf_power(cycle(5), 3).is_zero());
  CHECK(equals(sqf_power(cycle(6), 1), edge_ideal(cycle(6))));
  CHECK(sqf_power(cycle(6), 0).is_unit());
  CHECK(sqf_power(cycle(6), 0).to_string() == "<1>");
  CHECK(equals(sqf_power(cycle(4), 2), sqf_power(cycle(4), 2)));
  CHECK_THROWS_AS(sqf_power(path(3), -1), InvalidParameter);
  for (int k = 1; k <= 3; ++k) {
    const SqfIdeal p = sqf_power(cycle(7), k);
    for (Mask g : p.gens()) CHECK(popcount(g) == 2 * k);
  }
  // C_13 second power: 13 * 10 / 2 disjoint edge pairs, all distinct supports.
  CHECK(sqf_power(cycle(13), 2).size() == 65);
  CHECK(equals(sqf_power(cycle(6), 2), sqf_power_bruteforce(edge_ideal(cycle(6)), 2)));
}

TEST_CASE("minimalize") {
  CHECK(minimalize(3, {m({1, 2}), m({1, 2, 3})}).gens() == std::vector<Mask>{m({1, 2})});
  CHECK(minimalize(3, {}).is_zero());
  CHECK(minimalize(3, {m({1, 2}), m({2, 3}), m({1, 2})}).size() == 2);
  CHECK_THROWS_AS(SqfIdeal(2, {m({3})}), InvalidParameter);
  // degree first, then numeric support
  CHECK(minimalize(4, {m({3, 4}), m({1}), m({1, 2})}).gens() == std::vector<Mask>{m({1}), m({3, 4})});
}

TEST_CASE("colon and sum") {
  const SqfIdeal top(4, {m({1, 2, 3, 4})});
  CHECK(colon(top, m({2, 3})).gens() == std::vector<Mask>{m({1, 4})});
  const SqfIdeal p3 = edge_ideal(path(3));
  CHECK(equals(colon(SqfIdeal(5, {m({1, 2})}), m({4, 5})), SqfIdeal(5, {m({1, 2})})));
  CHECK(colon(SqfIdeal::zero(3), m({1})).is_zero());
  CHECK(colon(p3, m({2})).gens() == std::vector<Mask>{m({1}), m({3})});
  CHECK(colon(p3, m({1, 2})).is_unit());

  CHECK(add(SqfIdeal(2, {m({1, 2})}), SqfIdeal(2, {m({1})})).gens() == std::vector<Mask>{m({1})});
  CHECK(equals(add(p3, SqfIdeal::zero(3)), p3));
  CHECK(add(SqfIdeal(3, {m({1, 2})}), SqfIdeal(3, {m({2, 3})})).size() == 2);
  CHECK_THROWS_AS(add(p3, SqfIdeal::zero(4)), InvalidParameter);
  CHECK_FALSE(equals(p3, SqfIdeal(3, {m({1, 2})})));

  CHECK_THROWS_AS(multiply(p3, m({4})), InvalidParameter);
  CHECK(multiply(SqfIdeal(4, {m({1})}), m({4})).gens() == std::vector<Mask>{m({1, 4})});
  CHECK(extend_ambient(p3, 5).ambient() == 5);
  CHECK(SqfIdeal::variables(4, m({2, 4})).size() == 2);
}

TEST_CASE("membership and degrees") {
  const SqfIdeal p3 = edge_ideal(path(3));
  CHECK(p3.contains(m({1, 2, 3})));
  CHECK_FALSE(p3.contains(m({1, 3})));
  CHECK(p3.support() == m({1, 2, 3}));
  CHECK(p3.min_degree() == 2);
  CHECK(p3.is_equigenerated());
  CHECK_FALSE(SqfIdeal(3, {m({1}), m({2, 3})}).is_equigenerated());
  CHECK_THROWS_AS(SqfIdeal::zero(2).min_degree(), InvalidParameter);
}

TEST_CASE("colon by an edge") {
  const IdealPair p4 = colon_identity_edge(path(4), 2, 1, 2);
  CHECK(equals(p4.left, p4.right));
  CHECK(p4.left.gens() == std::vector<Mask>{m({1, 4})});
  CHECK_THROWS_AS(colon_identity_edge(path(4), 2, 0, 2), InvalidParameter);

  // On C_n the right side is the second power of C_{n-2} rewired through x3 xn.
  for (int n = 6; n <= 9; ++n) {
    const Graph c = cycle(n);
    const IdealPair p = colon_identity_edge(c, 2, 0, 1);
    CHECK(equals(p.left, p.right));
    std::vector<Edge> rewired;
    for (Vertex v = 2; v + 1 < n; ++v) rewired.emplace_back(v, v + 1);
    rewired.emplace_back(2, n - 1);
    CHECK(equals(p.left, edge_ideal(Graph(n, rewired))));
  }

  for (int k = 2; k <= 4; ++k) {
    const Graph g = whisker(cycle(5));
    const IdealPair a = colon_identity_edge(g, k, 0, 1);
    const IdealPair b = colon_identity_edge_alt(g, k, 0, 1);
    CHECK(equals(a.left, a.right));
    CHECK(equals(b.left, b.right));
  }

  const IdealPair second = colon_identity_second_power(cycle(7), 2, 3);
  CHECK(equals(second.left, second.right));
  CHECK(equals(second.left, colon_identity_edge(cycle(7), 2, 2, 3).right));
}

TEST_CASE("colon by a vertex") {
  const IdealPair p5 = colon_identity_vertex(path(5), 2, 2);
  CHECK(equals(p5.left, p5.right));
  const IdealPair c5 = colon_identity_vertex(cycle(5), 2, 0);
  CHECK(equals(c5.left, c5.right));
  std::vector<Edge> edges{{1, 2}, {2, 3}, {3, 4}};
  const Graph lone(5, edges);
  const IdealPair iso = colon_identity_vertex(lone, 2, 0);
  CHECK(equals(iso.left, sqf_power(lone, 2)));
  CHECK(equals(iso.right, sqf_power(lone, 2)));
}

TEST_CASE("vertex deletion modulo x") {
  for (Vertex x = 0; x < 6; ++x) {
    const IdealPair p = colon_identity_delete(cycle(6), 2, x);
    CHECK(equals(p.left, p.right));
  }
}

TEST_CASE("star colon") {
  const IdealPair p5 = colon_identity_star(path(5), 2, 2);
  CHECK(equals(p5.left, p5.right));
  for (int n = 5; n <= 8; ++n) {
    for (int k = 1; k <= (n - 3) / 2; ++k) {
      const IdealPair p = colon_identity_star(path(n), k, n - 2);
      CHECK(equals(p.left, p.right));
      std::vector<Edge> shorter;
      for (Vertex v = 0; v + 1 < n - 3; ++v) shorter.emplace_back(v, v + 1);
      const SqfIdeal expected = add_variables(sqf_power(Graph(n, shorter), k), bit(n - 3) | bit(n - 1));
      CHECK(equals(p.right, expected));
    }
  }
  std::vector<Edge> edges{{1, 2}, {2, 3}};
  const Graph lone(4, edges);
  const IdealPair iso = colon_identity_star(lone, 1, 0);
  CHECK(equals(iso.left, colon(edge_ideal(lone), bit(0))));
}

TEST_CASE("colon exchanges with added variables") {
  const SqfIdeal i(5, {m({1, 2}), m({2, 3, 4}), m({4, 5})});
  const IdealPair p = colon_identity_exchange(i, m({1, 2}), 3);
  CHECK(equals(p.left, p.right));
  CHECK_THROWS_AS(colon_identity_exchange(i, m({1, 4}), 3), InvalidParameter);
}

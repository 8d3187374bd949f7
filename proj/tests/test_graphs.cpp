#include "doctest.h"
#include "sqfpow/errors.hpp"
#include "sqfpow/graphs.hpp"

using namespace sqfpow;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.size(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("bit helpers") {
  CHECK(popcount(0b1011) == 3);
  CHECK(is_subset(0b0011, 0b0111));
  CHECK_FALSE(is_subset(0b1000, 0b0111));
  CHECK(to_indices(0b10101) == std::vector<Vertex>{0, 2, 4});
  const std::vector<Vertex> idx{1, 3};
  CHECK(from_indices(idx) == 0b1010);
  CHECK(low_mask(64) == ~Mask{0});
  // {0,1} < {0,2} < {1}
  CHECK(lex_less(0b011, 0b101));
  CHECK(lex_less(0b101, 0b010));
  CHECK(lex_less(0b001, 0b011));
  CHECK_FALSE(lex_less(0b011, 0b011));
}

TEST_CASE("paths and cycles") {
  CHECK(path(1).size() == 1);
  CHECK(path(1).edge_count() == 0);
  const Graph p4 = path(4);
  CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.label(0) == "x1");
  CHECK(path(6).edge_count() == 5);
  CHECK(matching_number(path(6)) == 3);
  CHECK(cycle(3).edge_count() == 3);
  CHECK(matching_number(cycle(7)) == 3);
  CHECK(matching_number(cycle(9)) == 4);
  for (int n = 1; n <= 12; ++n) CHECK(matching_number(path(n)) == n / 2);
  CHECK_THROWS_AS(path(0), InvalidParameter);
  CHECK_THROWS_AS(cycle(2), InvalidParameter);
}

TEST_CASE("whiskers") {
  const Graph w = whisker(path(3));
  CHECK(w.size() == 6);
  CHECK(w.edge_count() == 5);
  CHECK(w.label(3) == "y1");
  const Graph wc = whisker(cycle(5));
  CHECK(wc.size() == 10);
  CHECK(wc.edge_count() == 10);
  CHECK(matching_number(wc) == 5);
  CHECK(whisker(path(1)).edge_count() == 1);
  for (int m = 3; m <= 7; ++m) CHECK(matching_number(whisker(cycle(m))) == m);
}

TEST_CASE("multi-whiskered families") {
  const std::vector<int> ones{1, 1, 1};
  const Graph a = multi_whiskered_path(3, ones);
  CHECK(degree_sequence(a) == degree_sequence(whisker(path(3))));
  CHECK(a.edge_count() == whisker(path(3)).edge_count());
  const std::vector<int> two_three{2, 3};
  const Graph b = multi_whiskered_path(2, two_three);
  CHECK(b.size() == 7);
  CHECK(b.edge_count() == 6);
  const std::vector<int> four{1, 1, 1, 1};
  CHECK(matching_number(multi_whiskered_path(4, four)) == 4);
  const std::vector<int> bad{1, 0};
  CHECK_THROWS_AS(multi_whiskered_path(2, bad), InvalidParameter);

  CHECK(degree_sequence(multi_whiskered_cycle(5, 1)) == degree_sequence(whisker(cycle(5))));
  CHECK(multi_whiskered_cycle(4, 3).size() == 10);
  CHECK(is_chordal(complement(multi_whiskered_cycle(3, 1))));
  CHECK(is_chordal(complement(multi_whiskered_cycle(3, 2))));
}

TEST_CASE("edge list parsing") {
  const Graph p3 = parse_edge_list("a b\nb c");
  CHECK(p3.size() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.label(0) == "a");
  CHECK(parse_edge_list("1 2\n2 3\n3 1").edge_count() == 3);
  CHECK(parse_edge_list("a b\na b").edge_count() == 1);
  CHECK(parse_edge_list("# header\n\na b   # trailing\n").edge_count() == 1);
  CHECK_THROWS_AS(parse_edge_list("a a"), ParseError);
  try {
    parse_edge_list("a b\nb c\nc d e\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  const Graph c5 = cycle(5);
  const Graph back = parse_edge_list(to_edge_list(c5));
  CHECK(back.edge_count() == 5);
  for (const Edge& e : c5.edges()) {
    CHECK(back.has_edge(*back.find_label(c5.label(e.u)), *back.find_label(c5.label(e.v))));
  }
}

TEST_CASE("vertex deletion") {
  const Graph p = delete_vertices(cycle(5), bit(0));
  CHECK(p.size() == 4);
  CHECK(p.edge_count() == 3);
  CHECK(degree_sequence(p) == degree_sequence(path(4)));
  CHECK(delete_vertices(path(4), Mask{0}) == path(4));
  const std::vector<Vertex> gone{0, 1, 6};
  const Graph q = delete_vertices(cycle(7), gone);
  CHECK(q.size() == 4);
  CHECK(q.labels() == std::vector<std::string>{"x3", "x4", "x5", "x6"});
  CHECK(q.edges() == path(4).edges());
  CHECK_THROWS_AS(delete_vertices(path(3), bit(5)), InvalidParameter);

  const Graph iso = isolate_vertices(cycle(5), bit(0));
  CHECK(iso.size() == 5);
  CHECK(iso.edge_count() == 3);
  CHECK(iso.degree(0) == 0);
}

TEST_CASE("matchings") {
  const auto two = enumerate_k_matchings(path(4), 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == Matching{{0, 1}, {2, 3}});
  CHECK(enumerate_k_matchings(cycle(4), 2).size() == 2);
  const auto none = enumerate_k_matchings(cycle(5), 0);
  REQUIRE(none.size() == 1);
  CHECK(none[0].empty());
  CHECK(enumerate_k_matchings(cycle(5), 3).empty());
  CHECK(is_matching(cycle(4), {{0, 1}, {2, 3}}));
  CHECK_FALSE(is_matching(cycle(4), {{0, 1}, {1, 2}}));
  CHECK_FALSE(is_matching(cycle(4), {{0, 2}}));
}

TEST_CASE("induced matchings and gaps") {
  CHECK(induced_matching_number(path(4)) == 1);
  CHECK(induced_matching_number(cycle(3)) == 1);
  CHECK(induced_matching_number(path(5)) == 2);
  // reg(I(G)) = nu_1(G) + 1 for trees, and reg = 2 + floor((m-1)/2) here,
  // so nu_1 = ceil(m/2).
  for (int m = 3; m <= 7; ++m) {
    const std::vector<int> ones(static_cast<std::size_t>(m), 1);
    CHECK(induced_matching_number(multi_whiskered_path(m, ones)) == (m + 1) / 2);
  }
  const Graph p5 = path(5);
  CHECK(is_gap(p5, {0, 1}, {3, 4}));
  CHECK_FALSE(is_gap(p5, {0, 1}, {2, 3}));
  CHECK_FALSE(is_gap(p5, {0, 1}, {1, 2}));
}

TEST_CASE("forests and chordality") {
  CHECK(is_forest(path(6)));
  CHECK_FALSE(is_forest(cycle(4)));
  CHECK(is_forest(cycle(4), 0b0111));
  CHECK(is_chordal(cycle(3)));
  CHECK_FALSE(is_chordal(cycle(4)));
  CHECK(is_chordal(path(5)));
  const std::vector<std::size_t> counts{1, 2, 3, 6, 10, 20};
  for (int m = 1; m <= 6; ++m) {
    const auto forests = enumerate_forests(m);
    CHECK(forests.size() == counts[static_cast<std::size_t>(m - 1)]);
    for (const auto& edges : forests) CHECK(is_forest(Graph(m, edges)));
  }
}

TEST_CASE("admissible matchings") {
  const AdmissibleResult p7 = admissible_matching_number(path(7), 2);
  CHECK(p7.value == 3);
  REQUIRE(p7.witness);
  CHECK_FALSE(check_admissible_witness(path(7), *p7.witness, 2));
  CHECK(admissible_matching_number(path(2), 1).value == 1);
  const Graph wp3 = whisker(path(3));
  CHECK(admissible_matching_number(wp3, 1).value == induced_matching_number(wp3));
  CHECK(admissible_matching_number(wp3, 1).value == 2);
  CHECK_THROWS_AS(admissible_matching_number(path(4), 3), InvalidParameter);

  // A block that is not a forest is rejected by the validator.
  AdmissibleWitness bad;
  bad.blocks = {{{0, 1}, {2, 3}}};
  CHECK(check_admissible_witness(cycle(4), bad, 2));
  // Two blocks whose edges touch are rejected.
  AdmissibleWitness touching;
  touching.blocks = {{{0, 1}}, {{2, 3}}};
  CHECK(check_admissible_witness(path(4), touching, 1));
}

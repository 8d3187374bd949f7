#include "doctest.h"
#include "sqfpow/errors.hpp"
#include "sqfpow/homalg.hpp"

using namespace sqfpow;

namespace {

const FieldSpec kModP{};
const FieldSpec kQ{0};

}  // namespace

TEST_CASE("Betti table container") {
  BettiTable t(3);
  CHECK(t.regularity() == 1);
  CHECK(t.max_index() == -1);
  t.add(0, 2, 2);
  t.add(1, 3, 1);
  t.add(1, 3, 0);
  CHECK(t.at(0, 2) == 2);
  CHECK(t.at(5, 5) == 0);
  CHECK(t.regularity() == 2);
  CHECK(t.max_index() == 1);
  CHECK(t.total(0) == 2);
  CHECK(t.to_csv() == "i,j,beta\n0,2,2\n1,3,1\n");
  CHECK(t.to_text() ==
        "        0 1\n"
        "total:  2 1\n"
        "    2:  2 1\n");
}

TEST_CASE("two-generator ideal") {
  const SqfIdeal p3 = edge_ideal(path(3));
  for (const BettiTable& t : {betti_table(p3, kModP), betti_hochster(p3, kModP), betti_facet_formula(p3, kModP),
                              betti_taylor_oracle(p3, kModP)}) {
    CHECK(t.at(0, 2) == 2);
    CHECK(t.at(1, 3) == 1);
    CHECK(t.entries().size() == 2);
  }
}

TEST_CASE("principal ideal") {
  const SqfIdeal top = sqf_power(path(4), 2);
  const BettiTable t = betti_table(top, kModP);
  CHECK(t.entries().size() == 1);
  CHECK(t.at(0, 4) == 1);
  CHECK(betti_facet_formula(top, kModP) == t);
  CHECK(betti_taylor_oracle(top, kModP) == t);
  const InvariantBundle b = compute_invariants(top, kModP);
  CHECK(b.reg == 4);
  CHECK(b.pd_quotient == 1);
  CHECK(b.depth_quotient == 3);
  CHECK(b.linear_resolution);
}

TEST_CASE("routes agree on small cycles and their powers") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      const SqfIdeal i = sqf_power(cycle(n), k);
      const BettiTable engine = betti_table(i, kModP);
      CHECK(betti_hochster(i, kModP) == engine);
      CHECK(betti_facet_formula(i, kModP) == engine);
      CHECK(betti_table(i, kQ) == engine);
      if (i.size() <= static_cast<std::size_t>(kMaxTaylorGenerators)) CHECK(betti_taylor_oracle(i, kModP) == engine);
    }
  }
}

TEST_CASE("thread count does not change the table") {
  const SqfIdeal i = sqf_power(cycle(11), 2);
  CHECK(betti_table(i, kModP, 1) == betti_table(i, kModP, 4));
}

TEST_CASE("second power of C_13") {
  const SqfIdeal i = sqf_power(cycle(13), 2);
  const BettiTable t = betti_table(i, kModP, 0);
  CHECK(t.at(6, 13) != 0);
  CHECK(t.regularity() == 7);
  CHECK(betti_facet_formula(i, kModP).at(6, 13) == t.at(6, 13));
}

TEST_CASE("engine refusals") {
  CHECK_THROWS_AS(betti_hochster(SqfIdeal::zero(3), kModP), InvalidParameter);
  CHECK_THROWS_AS(betti_facet_formula(SqfIdeal::unit(3), kModP), InvalidParameter);
  CHECK_THROWS_AS(betti_taylor_oracle(edge_ideal(cycle(13)), kModP), CapExceeded);
  CHECK_THROWS_AS(betti_table(edge_ideal(cycle(23)), kModP), CapExceeded);
}

TEST_CASE("regularity") {
  CHECK(regularity(sqf_power(path(6), 2), kModP) == 4);
  CHECK(regularity(SqfIdeal::zero(4), kModP) == 1);
  CHECK(regularity(sqf_power(cycle(13), 2), kModP) == 7);
  CHECK_THROWS_AS(regularity(SqfIdeal::unit(2), kModP), InvalidParameter);
}

TEST_CASE("depth, dimension and Cohen-Macaulayness") {
  CHECK(depth_quotient(edge_ideal(cycle(3)), kModP) == 1);
  CHECK(depth_quotient(sqf_power(cycle(7), 2), kModP) == 4);
  CHECK(depth_quotient(sqf_power(whisker(cycle(3)), 2), kModP) == 3);
  CHECK(depth_quotient(SqfIdeal::zero(5), kModP) == 5);
  CHECK(pd_quotient(SqfIdeal::zero(5), kModP) == 0);
  CHECK_THROWS_AS(depth_quotient(SqfIdeal::unit(2), kModP), InvalidParameter);

  CHECK(krull_dim_quotient(edge_ideal(cycle(5))) == 2);
  CHECK(krull_dim_quotient(SqfIdeal::zero(4)) == 4);
  for (int m = 1; m <= 5; ++m) CHECK(krull_dim_quotient(edge_ideal(whisker(path(m)))) == m);
  for (int k = 1; k <= 3; ++k) CHECK(krull_dim_quotient(sqf_power(whisker(path(3)), k)) == 3 + k - 1);

  CHECK(is_cohen_macaulay(sqf_power(whisker(path(3)), 2), kModP));
  CHECK(is_cohen_macaulay(SqfIdeal::zero(3), kModP));
  const SqfIdeal c5 = edge_ideal(cycle(5));
  CHECK(is_cohen_macaulay(c5, kModP) == (depth_quotient(c5, kModP) == krull_dim_quotient(c5)));
  CHECK_FALSE(is_cohen_macaulay(edge_ideal(cycle(6)), kModP));
}

TEST_CASE("linear resolutions") {
  for (int n : {5, 7, 9}) CHECK(has_linear_resolution(sqf_power(cycle(n), n / 2), kModP));
  CHECK(has_linear_resolution(sqf_power(cycle(8), 3), kModP));
  CHECK_FALSE(has_linear_resolution(sqf_power(cycle(8), 2), kModP));
  CHECK_FALSE(has_linear_resolution(sqf_power(whisker(cycle(6)), 2), kModP));
  CHECK_THROWS_AS(has_linear_resolution(SqfIdeal(3, {0b001, 0b110}), kModP), InvalidParameter);
}

TEST_CASE("invariant bundle is consistent") {
  for (int n = 4; n <= 9; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      const SqfIdeal i = sqf_power(cycle(n), k);
      const InvariantBundle b = compute_invariants(i, kModP);
      CHECK(b.depth_quotient + b.pd_quotient == n);
      CHECK(b.depth_quotient <= b.krull_dim_quotient);
      CHECK(b.is_cm == (b.depth_quotient == b.krull_dim_quotient));
    }
  }
}

TEST_CASE("restriction keeps the faces inside the subset") {
  const SimplicialComplex d(0b1111, {0b0111, 0b1100});
  CHECK(restrict_complex(d, 0b0110).facets() == std::vector<Mask>{0b0110});
  CHECK(restrict_complex(d, 0b1010).facets() == std::vector<Mask>{0b0010, 0b1000});
}

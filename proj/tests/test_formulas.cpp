#include <optional>
#include <stdexcept>

#include "doctest.h"
#include "sqfpow/errors.hpp"
#include "sqfpow/families.hpp"
#include "sqfpow/formulas.hpp"

using namespace sqfpow;

namespace {

std::optional<PredictionResult> find(const Predictions& ps, PredictionKind kind, PredictionStatus status) {
  for (const PredictionResult& p : ps) {
    if (p.kind == kind && p.covered() && p.status == status) return p;
  }
  return std::nullopt;
}

std::optional<int> proven_exact(const Predictions& ps) {
  const auto p = find(ps, PredictionKind::Exact, PredictionStatus::Proven);
  return p ? std::optional<int>(p->lo) : std::nullopt;
}

bool not_covered(const Predictions& ps) { return ps.size() == 1 && !ps[0].covered(); }

}  // namespace

TEST_CASE("prediction values") {
  const auto e = PredictionResult::exact(3, PredictionStatus::Proven, "x");
  CHECK(e.contains(3));
  CHECK_FALSE(e.contains(4));
  const auto i = PredictionResult::interval(2, 5, PredictionStatus::Proven, "y");
  CHECK(i.contains(2));
  CHECK(i.contains(5));
  CHECK_FALSE(i.contains(6));
  CHECK_THROWS_AS(PredictionResult::interval(5, 2, PredictionStatus::Proven, "z"), std::logic_error);
  CHECK_FALSE(PredictionResult::not_covered().contains(0));
  CHECK(floor_div(-1, 2) == -1);
  CHECK(ceil_div(7, 3) == 3);
}

TEST_CASE("family descriptors") {
  CHECK(parse_family("cycle:13").descriptor() == "cycle:13");
  CHECK(parse_family("mwcycle:5:2").graph().size() == 5 + 4 + 2);
  CHECK(parse_family("mwpath:3:1,2,1").graph().size() == 3 + 4);
  CHECK(parse_family("cmforest:1-2,2-3").size == 3);
  CHECK(parse_family("cmforest:4:1-2").graph().size() == 8);
  CHECK(parse_family("cmforest:2").graph().edge_count() == 2);
  CHECK(parse_family("wpath:4").is_forest());
  CHECK_FALSE(parse_family("wcycle:4").is_forest());
  CHECK_THROWS_AS(parse_family("cmforest:1-2,2-3,3-1"), InvalidParameter);
  CHECK_THROWS(parse_family("triangle:3"));
  CHECK_THROWS(parse_family("path:x"));
  for (const char* d : {"path:7", "cycle:6", "wpath:3", "wcycle:5", "mwcycle:4:2", "mwpath:2:2,1", "cmforest:3:1-2"}) {
    const Family f = parse_family(d);
    CHECK(parse_family(f.descriptor()).graph() == f.graph());
    CHECK(family_matching_number(f) == matching_number(f.graph()));
  }
}

TEST_CASE("family instances") {
  CHECK(family_instances("cycle", 3, 13).size() == 11);
  CHECK(family_instances("mwcycle", 3, 6).size() == 8);
  CHECK(family_instances("mwpath", 1, 3).size() == 2 + 4 + 8);
  CHECK(family_instances("cmforest", 1, 5).size() == 1 + 2 + 3 + 6 + 10);
  CHECK_THROWS_AS(family_instances("star", 1, 3), InvalidParameter);
}

TEST_CASE("regularity predictions") {
  CHECK(proven_exact(predict_regularity(path_family(10), 3)) == 7);
  CHECK(proven_exact(predict_regularity(cycle_family(13), 2)) == 7);
  CHECK(proven_exact(predict_regularity(whiskered_cycle_family(5), 2)) == 5);
  for (int m = 3; m <= 6; ++m) {
    CHECK(proven_exact(predict_regularity(multi_whiskered_cycle_family(m, 2), 2)) == 4 + (m - 3) / 2);
  }
  const Predictions w74 = predict_regularity(whiskered_cycle_family(7), 4);
  const auto conj = find(w74, PredictionKind::Exact, PredictionStatus::Conjectural);
  REQUIRE(conj);
  CHECK(conj->lo == 9);
  const auto bounds = find(w74, PredictionKind::Interval, PredictionStatus::Proven);
  REQUIRE(bounds);
  CHECK(bounds->lo == 9);
  CHECK(bounds->hi == 9);
  CHECK(proven_exact(predict_regularity(multi_whiskered_path_family({1, 2, 2}), 2)) == 4 + 1 / 2);
  CHECK(proven_exact(predict_regularity(whiskered_cycle_family(5), 1)) == 5 / 2 + 1);
  CHECK_THROWS_AS(predict_regularity(path_family(4), 3), InvalidParameter);
  CHECK_THROWS_AS(predict_regularity(path_family(4), 0), InvalidParameter);
  CHECK(not_covered(predict_regularity(custom_family(cycle(4), "c4"), 1)));
}

TEST_CASE("overlapping formulas agree") {
  for (int n = 2; n <= 14; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      for (const Family& f : {path_family(n), n >= 3 ? cycle_family(n) : path_family(n)}) {
        std::optional<int> value;
        for (const PredictionResult& p : predict_regularity(f, k)) {
          if (p.kind != PredictionKind::Exact || !p.proven()) continue;
          if (value) CHECK(*value == p.lo);
          value = p.lo;
        }
        CHECK(value);
      }
    }
  }
}

TEST_CASE("depth predictions") {
  CHECK(proven_exact(predict_depth(cm_forest_family(4, {{0, 1}, {1, 2}, {2, 3}}), 3)) == 6);
  CHECK(proven_exact(predict_depth(cycle_family(9), 2)) == 4);
  CHECK(proven_exact(predict_depth(cycle_family(10), 4)) == 7);
  CHECK(proven_exact(predict_depth(cycle_family(7), 1)) == 2);
  CHECK(proven_exact(predict_depth(whiskered_cycle_family(3), 2)) == 3);
  CHECK(proven_exact(predict_depth(whiskered_cycle_family(5), 2)) == 6);
  CHECK(proven_exact(predict_depth(whiskered_cycle_family(6), 6)) == 11);
  const auto upper = find(predict_depth(whiskered_cycle_family(6), 3), PredictionKind::Interval, PredictionStatus::Proven);
  REQUIRE(upper);
  CHECK(upper->hi == 8);
  const auto conj = find(predict_depth(cycle_family(12), 3), PredictionKind::Exact, PredictionStatus::Conjectural);
  REQUIRE(conj);
  CHECK(conj->lo == 6);
  CHECK(find(predict_depth(cycle_family(12), 1), PredictionKind::Exact, PredictionStatus::Conjectural) == std::nullopt);
}

TEST_CASE("Cohen-Macaulay and linear-resolution predictions") {
  CHECK(proven_exact(predict_cm(cm_forest_family(3, {{0, 1}, {1, 2}}), 2)) == 1);
  CHECK(proven_exact(predict_cm(cm_forest_family(1, {}), 1)) == 1);
  CHECK(not_covered(predict_cm(cycle_family(6), 2)));
  CHECK(proven_exact(predict_linear_resolution(cycle_family(9), 4)) == 1);
  CHECK(proven_exact(predict_linear_resolution(cycle_family(8), 3)) == 1);
  CHECK(proven_exact(predict_linear_resolution(cycle_family(8), 2)) == 0);
  CHECK(proven_exact(predict_linear_resolution(whiskered_cycle_family(6), 2)) == 0);
}

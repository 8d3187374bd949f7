#include "sqfpow/formulas.hpp"

#include <algorithm>

#include "sqfpow/errors.hpp"

namespace sqfpow {

namespace {

using enum PredictionStatus;

const char* const kTopPower = "top matching power is polymatroidal";
const char* const kCoChordal = "co-chordal graphs have linear square-free powers";
const char* const kWCycleBounds = "whiskered cycle regularity bounds";

void require_k(const Family& family, int k) {
  const int nu = family_matching_number(family);
  if (k < 1 || k > nu) {
    throw InvalidParameter("k = " + std::to_string(k) + " outside 1.." + std::to_string(nu) + " for " +
                           family.descriptor());
  }
}

Predictions or_not_covered(Predictions p) {
  if (p.empty()) p.push_back(PredictionResult::not_covered());
  return p;
}

PredictionResult exact_bool(bool value, std::string source) {
  return PredictionResult::exact(value ? 1 : 0, Proven, std::move(source));
}

}  // namespace

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

PredictionResult PredictionResult::exact(int value, PredictionStatus status, std::string source) {
  return {PredictionKind::Exact, status, value, value, std::move(source)};
}

PredictionResult PredictionResult::interval(int lo, int hi, PredictionStatus status, std::string source) {
  if (lo > hi) throw std::logic_error("empty prediction interval from " + source);
  return {PredictionKind::Interval, status, lo, hi, std::move(source)};
}

PredictionResult PredictionResult::not_covered() { return {PredictionKind::NotCovered, Proven, 0, 0, "not covered"}; }

std::string PredictionResult::describe() const {
  const std::string tag = proven() ? "proven" : "conjectural";
  switch (kind) {
    case PredictionKind::Exact: return std::to_string(lo) + " (" + tag + ", " + source + ")";
    case PredictionKind::Interval:
      return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "] (" + tag + ", " + source + ")";
    case PredictionKind::NotCovered: return "not covered";
  }
  return "";
}

int family_matching_number(const Family& family) {
  switch (family.kind) {
    case FamilyKind::Path:
    case FamilyKind::Cycle: return family.size / 2;
    case FamilyKind::Custom: return matching_number(family.custom);
    default: return family.size;
  }
}

Predictions predict_regularity(const Family& f, int k) {
  require_k(f, k);
  const int n = f.size;
  const int nu = family_matching_number(f);
  Predictions out;
  switch (f.kind) {
    case FamilyKind::Path:
      out.push_back(PredictionResult::exact(2 * k + floor_div(n - 2 * k, 3), Proven, "path regularity"));
      break;
    case FamilyKind::Cycle:
      out.push_back(PredictionResult::exact(2 * k + floor_div(n - 2 * k, 3), Proven, "cycle regularity"));
      break;
    case FamilyKind::WhiskeredPath:
    case FamilyKind::MultiWhiskeredPath:
      out.push_back(PredictionResult::exact(2 * k + floor_div(n - k, 2), Proven, "whiskered path class regularity"));
      break;
    case FamilyKind::WhiskeredCycle:
    case FamilyKind::MultiWhiskeredCycle: {
      const bool plain = f.kind == FamilyKind::WhiskeredCycle;
      if (plain && k == 1) {
        out.push_back(PredictionResult::exact(n / 2 + 1, Proven, "whiskered cycle edge ideal regularity"));
      }
      if (plain || k >= 2) {
        out.push_back(PredictionResult::interval(2 * k + floor_div(n - k - 1, 2), 2 * k + floor_div(n - k, 2),
                                                 Proven, kWCycleBounds));
      }
      if (k == 2) {
        out.push_back(PredictionResult::exact(4 + floor_div(n - 3, 2), Proven,
                                              "whiskered cycle second power regularity"));
      }
      if (n == 3) out.push_back(PredictionResult::exact(2 * k, Proven, kCoChordal));
      if (plain) {
        // At k = m the printed floor goes negative; reg never drops below
        // the generator degree 2k.
        out.push_back(PredictionResult::exact(2 * k + std::max(0, floor_div(n - k - 1, 2)), Conjectural,
                                              "whiskered cycle regularity conjecture"));
      }
      break;
    }
    case FamilyKind::CMForest:
    case FamilyKind::Custom: break;
  }
  if ((f.kind == FamilyKind::Path || f.kind == FamilyKind::Cycle) && k == 1) {
    out.push_back(PredictionResult::exact(2 + floor_div(n - 2, 3), Proven, "edge ideal regularity of paths and cycles"));
  }
  if (f.kind != FamilyKind::Custom && k == nu) out.push_back(PredictionResult::exact(2 * k, Proven, kTopPower));
  return or_not_covered(std::move(out));
}

Predictions predict_depth(const Family& f, int k) {
  require_k(f, k);
  const int n = f.size;
  const int nu = family_matching_number(f);
  Predictions out;
  switch (f.kind) {
    case FamilyKind::Path: {
      const int c = ceil_div(n, 3);
      out.push_back(PredictionResult::exact(k <= c ? c + k - 1 : 2 * k - 1, Proven, "path depth"));
      break;
    }
    case FamilyKind::Cycle: {
      const int c = ceil_div(n, 3);
      if (k == 1) {
        out.push_back(PredictionResult::exact(ceil_div(n - 1, 3), Proven, "cycle edge ideal depth"));
        break;
      }
      if (k == 2) out.push_back(PredictionResult::exact(c + 1, Proven, "cycle second power depth"));
      out.push_back(PredictionResult::interval(c + k - 1, n - 1, Proven, "cycle depth lower bound"));
      if (n % 2 == 0 && k == nu - 1) {
        out.push_back(PredictionResult::exact(2 * k - 1, Proven, "even cycle depth one below the top power"));
      }
      out.push_back(PredictionResult::exact(k <= c ? c + k - 1 : 2 * k - 1, Conjectural, "cycle depth conjecture"));
      break;
    }
    case FamilyKind::WhiskeredPath:
    case FamilyKind::CMForest:
      out.push_back(PredictionResult::exact(n + k - 1, Proven, "CM forest depth"));
      break;
    case FamilyKind::WhiskeredCycle:
      if (k == 1) out.push_back(PredictionResult::exact(n, Proven, "whisker graphs are Cohen-Macaulay"));
      if (k == 2) {
        out.push_back(PredictionResult::exact(n == 3 ? 3 : n + 1, Proven, "whiskered cycle second power depth"));
      }
      out.push_back(PredictionResult::interval(2 * k - 1, n + k - 1, Proven, "whiskered cycle depth upper bound"));
      out.push_back(PredictionResult::exact(k <= n / 2 ? n + k - 1 : 2 * k - 1, Conjectural,
                                            "whiskered cycle depth conjecture"));
      break;
    case FamilyKind::MultiWhiskeredPath:
    case FamilyKind::MultiWhiskeredCycle:
    case FamilyKind::Custom: break;
  }
  if (f.kind != FamilyKind::Custom && k == nu) out.push_back(PredictionResult::exact(2 * k - 1, Proven, kTopPower));
  return or_not_covered(std::move(out));
}

Predictions predict_cm(const Family& f, int k) {
  require_k(f, k);
  Predictions out;
  if (f.kind == FamilyKind::WhiskeredPath || f.kind == FamilyKind::CMForest) {
    out.push_back(exact_bool(true, "CM forest powers are Cohen-Macaulay"));
  }
  if (f.kind == FamilyKind::WhiskeredCycle && k == 1) {
    out.push_back(exact_bool(true, "whisker graphs are Cohen-Macaulay"));
  }
  return or_not_covered(std::move(out));
}

Predictions predict_linear_resolution(const Family& f, int k) {
  require_k(f, k);
  const int n = f.size;
  const int nu = family_matching_number(f);
  Predictions out;
  switch (f.kind) {
    case FamilyKind::Path: out.push_back(exact_bool(floor_div(n - 2 * k, 3) == 0, "path regularity")); break;
    case FamilyKind::Cycle:
      out.push_back(exact_bool(k == nu || (n % 2 == 0 && k == nu - 1), "cycle linear resolution criterion"));
      break;
    case FamilyKind::WhiskeredPath:
    case FamilyKind::MultiWhiskeredPath:
      out.push_back(exact_bool(floor_div(n - k, 2) == 0, "whiskered path class regularity"));
      break;
    case FamilyKind::WhiskeredCycle:
    case FamilyKind::MultiWhiskeredCycle: {
      const bool plain = f.kind == FamilyKind::WhiskeredCycle;
      if (plain && k < n - 2) out.push_back(exact_bool(false, "whiskered cycle non-linearity"));
      if (plain && k == 1) out.push_back(exact_bool(n / 2 + 1 == 2, "whiskered cycle edge ideal regularity"));
      if (plain || k >= 2) {
        const int lo = 2 * k + floor_div(n - k - 1, 2);
        const int hi = 2 * k + floor_div(n - k, 2);
        if (lo > 2 * k) out.push_back(exact_bool(false, kWCycleBounds));
        if (hi == 2 * k) out.push_back(exact_bool(true, kWCycleBounds));
      }
      if (k == 2) out.push_back(exact_bool(floor_div(n - 3, 2) == 0, "whiskered cycle second power regularity"));
      if (n == 3) out.push_back(exact_bool(true, kCoChordal));
      break;
    }
    case FamilyKind::CMForest:
    case FamilyKind::Custom: break;
  }
  if (f.kind != FamilyKind::Custom && k == nu) out.push_back(exact_bool(true, kTopPower));
  return or_not_covered(std::move(out));
}

}  // namespace sqfpow

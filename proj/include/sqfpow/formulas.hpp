#pragma once

#include <string>
#include <vector>

#include "sqfpow/families.hpp"

namespace sqfpow {

enum class PredictionKind { Exact, Interval, NotCovered };
enum class PredictionStatus { Proven, Conjectural };

/// Boolean predictions use Exact with value 0 or 1.
struct PredictionResult {
  PredictionKind kind = PredictionKind::NotCovered;
  PredictionStatus status = PredictionStatus::Proven;
  int lo = 0;
  int hi = 0;
  std::string source;

  static PredictionResult exact(int value, PredictionStatus status, std::string source);
  static PredictionResult interval(int lo, int hi, PredictionStatus status, std::string source);
  static PredictionResult not_covered();

  bool covered() const { return kind != PredictionKind::NotCovered; }
  bool proven() const { return status == PredictionStatus::Proven; }
  bool contains(int value) const { return covered() && lo <= value && value <= hi; }
  std::string describe() const;
};

using Predictions = std::vector<PredictionResult>;

// Each predictor returns every applicable result, proven and conjectural,
// or a single NotCovered entry. All require 1 <= k <= nu of the instance.
Predictions predict_regularity(const Family& family, int k);
Predictions predict_depth(const Family& family, int k);
Predictions predict_cm(const Family& family, int k);
Predictions predict_linear_resolution(const Family& family, int k);

/// Closed-form matching number of the family instance.
int family_matching_number(const Family& family);

int ceil_div(int a, int b);
int floor_div(int a, int b);

}  // namespace sqfpow

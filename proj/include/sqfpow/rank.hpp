#pragma once

#include <span>
#include <utility>
#include <vector>

namespace sqfpow {

inline constexpr int kDefaultCharacteristic = 32003;

/// Coefficient field: characteristic 0 (exact rationals) or an odd prime.
struct FieldSpec {
  int characteristic = kDefaultCharacteristic;

  /// Throws InvalidParameter unless 0 or an odd prime below 2^31.
  static FieldSpec of(int characteristic);
  bool is_rational() const { return characteristic == 0; }
  bool operator==(const FieldSpec&) const = default;
};

/// Column-major sparse integer matrix; each column lists (row, value) with
/// distinct rows.
struct SparseMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<int, int>>> columns;

  int cols() const { return static_cast<int>(columns.size()); }
};

struct Elimination {
  int rank = 0;
  /// Row chosen as pivot by each independent column, in registration order.
  std::vector<int> pivot_rows;
};

/// Exact column elimination. Columns flagged in `skip` are not read.
Elimination eliminate(const SparseMatrix& m, FieldSpec field, std::span<const char> skip = {});

int exact_rank(const SparseMatrix& m, FieldSpec field);

}  // namespace sqfpow

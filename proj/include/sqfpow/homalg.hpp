#pragma once

#include <map>
#include <string>
#include <utility>

#include "sqfpow/ideals.hpp"
#include "sqfpow/rank.hpp"
#include "sqfpow/simplicial.hpp"

namespace sqfpow {

/// Graded Betti numbers β_{i,j} of an ideal I (not of R/I).
class BettiTable {
 public:
  explicit BettiTable(int ambient = 0) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  void add(int i, int j, long long value);
  long long at(int i, int j) const;
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// max(j - i) over nonzero entries; 1 for the empty table.
  int regularity() const;
  /// Largest i with a nonzero entry, -1 for the empty table.
  int max_index() const;
  long long total(int i) const;

  /// Macaulay-style diagram: columns i, rows j - i.
  std::string to_text() const;
  /// "i,j,beta" rows in (i, j) order.
  std::string to_csv() const;

  bool operator==(const BettiTable&) const = default;

 private:
  int ambient_;
  std::map<std::pair<int, int>, long long> entries_;
};

/// Largest number of variables actually used by the ideal that the
/// engines accept.
inline constexpr int kMaxEngineVariables = 22;
inline constexpr int kMaxTaylorGenerators = 12;

/// Production engine: visits the lcm lattice of the generators and takes
/// the smaller of the restricted Stanley-Reisner complex and the upper
/// Koszul complex at every lattice point. `threads` <= 0 means hardware
/// concurrency.
BettiTable betti_table(const SqfIdeal& ideal, FieldSpec field, int threads = 1);

BettiTable betti_hochster(const SqfIdeal& ideal, FieldSpec field);
BettiTable betti_facet_formula(const SqfIdeal& ideal, FieldSpec field);
BettiTable betti_taylor_oracle(const SqfIdeal& ideal, FieldSpec field);

/// Faces of d inside u: facets F ∩ u.
SimplicialComplex restrict_complex(const SimplicialComplex& d, Mask u);

struct InvariantBundle {
  int ambient = 0;
  int reg = 1;
  int pd_quotient = 0;
  int depth_quotient = 0;
  int krull_dim_quotient = 0;
  bool is_cm = true;
  bool linear_resolution = false;
};

InvariantBundle invariants_from_table(const SqfIdeal& ideal, const BettiTable& table);
InvariantBundle compute_invariants(const SqfIdeal& ideal, FieldSpec field, int threads = 1);

int regularity(const SqfIdeal& ideal, FieldSpec field);
int pd_quotient(const SqfIdeal& ideal, FieldSpec field);
int depth_quotient(const SqfIdeal& ideal, FieldSpec field);
int krull_dim_quotient(const SqfIdeal& ideal);
bool is_cohen_macaulay(const SqfIdeal& ideal, FieldSpec field);
/// Requires a nonzero ideal generated in a single degree.
bool has_linear_resolution(const SqfIdeal& ideal, FieldSpec field);

}  // namespace sqfpow

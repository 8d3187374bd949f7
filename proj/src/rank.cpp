#include "sqfpow/rank.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "sqfpow/errors.hpp"

namespace sqfpow {

FieldSpec FieldSpec::of(int characteristic) {
  if (characteristic == 0) return FieldSpec{0};
  if (characteristic < 3 || characteristic % 2 == 0) {
    throw InvalidParameter("characteristic must be 0 or an odd prime, got " + std::to_string(characteristic));
  }
  for (int d = 3; static_cast<long long>(d) * d <= characteristic; d += 2) {
    if (characteristic % d == 0) {
      throw InvalidParameter(std::to_string(characteristic) + " is not prime");
    }
  }
  return FieldSpec{characteristic};
}

namespace {

struct ModP {
  using Value = std::uint32_t;
  std::uint32_t p;

  Value from_int(int v) const {
    const long long r = v % static_cast<long long>(p);
    return static_cast<Value>(r < 0 ? r + p : r);
  }
  static bool is_zero(const Value& v) { return v == 0; }
  Value mul(Value a, Value b) const { return static_cast<Value>(std::uint64_t{a} * b % p); }
  Value sub(Value a, Value b) const { return a >= b ? a - b : a + p - b; }
  Value inverse(Value a) const {
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint32_t e = p - 2;
    while (e != 0) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<Value>(result);
  }
};

using Entry = std::pair<int, std::uint32_t>;
using BigEntry = std::pair<int, boost::multiprecision::cpp_int>;

// Pivot choice: sparsest original row, ties to the larger row index.
int choose_pivot(const auto& column, const std::vector<int>& row_count) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < column.size(); ++i) {
    const int r = column[i].first;
    const int b = column[best].first;
    if (row_count[r] < row_count[b] || (row_count[r] == row_count[b] && r > b)) best = i;
  }
  return static_cast<int>(best);
}

// Index into `column` of the entry whose row was registered earliest.
int earliest_pivot_entry(const auto& column, const std::vector<int>& owner) {
  int best = -1;
  int best_owner = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < column.size(); ++i) {
    const int o = owner[column[i].first];
    if (o >= 0 && o < best_owner) {
      best_owner = o;
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::vector<int> count_rows(const SparseMatrix& m, std::span<const char> skip) {
  std::vector<int> count(m.rows, 0);
  for (int c = 0; c < m.cols(); ++c) {
    if (!skip.empty() && skip[c]) continue;
    for (const auto& [r, v] : m.columns[c]) {
      if (r < 0 || r >= m.rows) throw InvalidParameter("matrix row index out of range");
      ++count[r];
    }
  }
  return count;
}

Elimination eliminate_mod_p(const SparseMatrix& m, ModP f, std::span<const char> skip) {
  const std::vector<int> row_count = count_rows(m, skip);
  std::vector<int> owner(m.rows, -1);
  std::vector<std::vector<Entry>> stored;
  Elimination out;
  std::vector<Entry> column;
  std::vector<Entry> merged;
  for (int c = 0; c < m.cols(); ++c) {
    if (!skip.empty() && skip[c]) continue;
    column.clear();
    for (const auto& [r, v] : m.columns[c]) {
      const auto x = f.from_int(v);
      if (x != 0) column.emplace_back(r, x);
    }
    std::sort(column.begin(), column.end());
    for (int hit; (hit = earliest_pivot_entry(column, owner)) >= 0;) {
      const auto factor = column[hit].second;
      const auto& pivot_col = stored[owner[column[hit].first]];
      merged.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < column.size() || j < pivot_col.size()) {
        if (j == pivot_col.size() || (i < column.size() && column[i].first < pivot_col[j].first)) {
          merged.push_back(column[i++]);
        } else if (i == column.size() || pivot_col[j].first < column[i].first) {
          merged.emplace_back(pivot_col[j].first, f.sub(0, f.mul(factor, pivot_col[j].second)));
          ++j;
        } else {
          const auto v = f.sub(column[i].second, f.mul(factor, pivot_col[j].second));
          if (v != 0) merged.emplace_back(column[i].first, v);
          ++i;
          ++j;
        }
      }
      column.swap(merged);
    }
    if (column.empty()) continue;
    const int p = choose_pivot(column, row_count);
    const auto inv = f.inverse(column[p].second);
    for (auto& e : column) e.second = f.mul(e.second, inv);
    owner[column[p].first] = static_cast<int>(stored.size());
    out.pivot_rows.push_back(column[p].first);
    stored.push_back(column);
  }
  out.rank = static_cast<int>(stored.size());
  return out;
}

void remove_content(std::vector<BigEntry>& column) {
  boost::multiprecision::cpp_int g = 0;
  for (const auto& e : column) {
    g = boost::multiprecision::gcd(g, e.second);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& e : column) e.second /= g;
  }
}

Elimination eliminate_rational(const SparseMatrix& m, std::span<const char> skip) {
  using boost::multiprecision::cpp_int;
  const std::vector<int> row_count = count_rows(m, skip);
  std::vector<int> owner(m.rows, -1);
  std::vector<std::vector<BigEntry>> stored;
  std::vector<cpp_int> pivot_value;
  Elimination out;
  std::vector<BigEntry> column;
  std::vector<BigEntry> merged;
  for (int c = 0; c < m.cols(); ++c) {
    if (!skip.empty() && skip[c]) continue;
    column.clear();
    for (const auto& [r, v] : m.columns[c]) {
      if (v != 0) column.emplace_back(r, cpp_int(v));
    }
    std::sort(column.begin(), column.end());
    for (int hit; (hit = earliest_pivot_entry(column, owner)) >= 0;) {
      const int slot = owner[column[hit].first];
      const auto& pivot_col = stored[slot];
      // column <- a * column - b * pivot_col with a the stored pivot and b
      // the entry being cleared; integers throughout.
      const cpp_int a = pivot_value[slot];
      const cpp_int b = column[hit].second;
      merged.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < column.size() || j < pivot_col.size()) {
        if (j == pivot_col.size() || (i < column.size() && column[i].first < pivot_col[j].first)) {
          merged.emplace_back(column[i].first, a * column[i].second);
          ++i;
        } else if (i == column.size() || pivot_col[j].first < column[i].first) {
          merged.emplace_back(pivot_col[j].first, -b * pivot_col[j].second);
          ++j;
        } else {
          cpp_int v = a * column[i].second - b * pivot_col[j].second;
          if (v != 0) merged.emplace_back(column[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      column.swap(merged);
      remove_content(column);
    }
    if (column.empty()) continue;
    const int p = choose_pivot(column, row_count);
    owner[column[p].first] = static_cast<int>(stored.size());
    out.pivot_rows.push_back(column[p].first);
    pivot_value.push_back(column[p].second);
    stored.push_back(column);
  }
  out.rank = static_cast<int>(stored.size());
  return out;
}

}  // namespace

Elimination eliminate(const SparseMatrix& m, FieldSpec field, std::span<const char> skip) {
  if (!skip.empty() && static_cast<int>(skip.size()) != m.cols()) {
    throw InvalidParameter("skip mask must cover every column");
  }
  if (field.is_rational()) return eliminate_rational(m, skip);
  return eliminate_mod_p(m, ModP{static_cast<std::uint32_t>(field.characteristic)}, skip);
}

int exact_rank(const SparseMatrix& m, FieldSpec field) { return eliminate(m, field).rank; }

}  // namespace sqfpow

#include "sqfpow/homalg.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "sqfpow/errors.hpp"

namespace sqfpow {

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) return;
  if (value < 0 || i < 0) throw std::logic_error("negative Betti entry");
  entries_[{i, j}] += value;
}

long long BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  if (entries_.empty()) return 1;
  int reg = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [key, value] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

int BettiTable::max_index() const {
  int top = -1;
  for (const auto& [key, value] : entries_) top = std::max(top, key.first);
  return top;
}

long long BettiTable::total(int i) const {
  long long sum = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i) sum += value;
  }
  return sum;
}

std::string BettiTable::to_text() const {
  if (entries_.empty()) return "zero ideal: empty Betti table\n";
  const int cols = max_index() + 1;
  int low = std::numeric_limits<int>::max();
  int high = std::numeric_limits<int>::min();
  for (const auto& [key, value] : entries_) {
    low = std::min(low, key.second - key.first);
    high = std::max(high, key.second - key.first);
  }
  std::size_t width = 1;
  for (int i = 0; i < cols; ++i) width = std::max(width, std::to_string(total(i)).size());
  std::ostringstream out;
  const int label = static_cast<int>(std::max<std::size_t>(6, std::to_string(high).size() + 1));
  out << std::setw(label) << "" << ' ';
  for (int i = 0; i < cols; ++i) out << ' ' << std::setw(static_cast<int>(width)) << i;
  out << '\n' << std::setw(label) << "total:" << ' ';
  for (int i = 0; i < cols; ++i) out << ' ' << std::setw(static_cast<int>(width)) << total(i);
  out << '\n';
  for (int row = low; row <= high; ++row) {
    out << std::setw(label) << (std::to_string(row) + ":") << ' ';
    for (int i = 0; i < cols; ++i) {
      const long long v = at(i, i + row);
      out << ' ' << std::setw(static_cast<int>(width)) << (v == 0 ? std::string(".") : std::to_string(v));
    }
    out << '\n';
  }
  return out.str();
}

std::string BettiTable::to_csv() const {
  std::ostringstream out;
  out << "i,j,beta\n";
  for (const auto& [key, value] : entries_) out << key.first << ',' << key.second << ',' << value << '\n';
  return out.str();
}

namespace {

void require_proper(const SqfIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidParameter("the unit ideal has no quotient invariants");
}

struct Compressed {
  int size = 0;
  Mask support = 0;
  std::vector<Mask> gens;
};

Mask to_local(Mask global, Mask support) {
  Mask local = 0;
  int i = 0;
  for_each_bit(support, [&](Vertex v) {
    if (contains(global, v)) local |= bit(i);
    ++i;
  });
  return local;
}

Compressed compress(const SqfIdeal& ideal, int cap) {
  Compressed c;
  c.support = ideal.support();
  c.size = popcount(c.support);
  if (c.size > cap) {
    throw CapExceeded("ideal uses " + std::to_string(c.size) + " variables; limit is " + std::to_string(cap));
  }
  for (Mask g : ideal.gens()) c.gens.push_back(to_local(g, c.support));
  return c;
}

std::vector<Mask> deposit_table(Mask sigma) {
  const std::vector<Vertex> verts = to_indices(sigma);
  std::vector<Mask> dep(std::size_t{1} << verts.size(), 0);
  for (std::size_t l = 1; l < dep.size(); ++l) dep[l] = dep[l & (l - 1)] | bit(verts[std::countr_zero(l)]);
  return dep;
}

using Tally = std::map<std::pair<int, int>, long long>;

void add_tally(BettiTable& table, const Tally& t) {
  for (const auto& [key, value] : t) table.add(key.first, key.second, value);
}

// Union-closure of the generator supports, i.e. the lcm lattice minus 1.
std::vector<Mask> lcm_lattice(const std::vector<Mask>& gens) {
  std::set<Mask> closed(gens.begin(), gens.end());
  std::vector<Mask> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask a : frontier) {
      for (Mask g : gens) {
        if (closed.insert(a | g).second) next.push_back(a | g);
      }
    }
    frontier.swap(next);
  }
  return {closed.begin(), closed.end()};
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

SimplicialComplex restrict_complex(const SimplicialComplex& d, Mask u) {
  if (!is_subset(u, d.vertex_set())) throw InvalidParameter("subset leaves the vertex set");
  std::vector<Mask> facets;
  for (Mask f : d.facets()) facets.push_back(f & u);
  return SimplicialComplex(u, std::move(facets));
}

BettiTable betti_table(const SqfIdeal& ideal, FieldSpec field, int threads) {
  require_proper(ideal);
  BettiTable table(ideal.ambient());
  if (ideal.is_zero()) return table;
  const Compressed c = compress(ideal, kMaxEngineVariables);
  const std::size_t total = std::size_t{1} << c.size;

  std::vector<char> in_ideal(total, 0);
  std::vector<std::uint32_t> below(total, 0);
  for (Mask g : c.gens) {
    in_ideal[g] = 1;
    below[g] = static_cast<std::uint32_t>(g);
  }
  for (int v = 0; v < c.size; ++v) {
    const std::size_t b = std::size_t{1} << v;
    for (std::size_t m = 0; m < total; ++m) {
      if (m & b) {
        in_ideal[m] |= in_ideal[m ^ b];
        below[m] |= below[m ^ b];
      }
    }
  }
  // subsets_in[m] = number of subsets of m lying in the ideal.
  std::vector<std::uint32_t> subsets_in(in_ideal.begin(), in_ideal.end());
  for (int v = 0; v < c.size; ++v) {
    const std::size_t b = std::size_t{1} << v;
    for (std::size_t m = 0; m < total; ++m) {
      if (m & b) subsets_in[m] += subsets_in[m ^ b];
    }
  }
  std::vector<Mask> lattice;
  for (std::size_t m = 1; m < total; ++m) {
    if (below[m] == m) lattice.push_back(m);
  }
  below = {};

  const int workers = std::max(1, std::min<int>(resolve_threads(threads), static_cast<int>(lattice.size())));
  std::vector<Tally> partial(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](int w) {
    std::vector<char> member;
    for (std::size_t idx; (idx = next.fetch_add(1)) < lattice.size();) {
      const Mask sigma = lattice[idx];
      const int q = popcount(sigma);
      const std::vector<Mask> dep = deposit_table(sigma);
      const std::uint64_t upper = subsets_in[sigma];
      const bool use_koszul = upper <= dep.size() - upper;
      member.assign(dep.size(), 0);
      for (std::size_t l = 0; l < dep.size(); ++l) {
        member[l] = use_koszul ? in_ideal[sigma ^ dep[l]] : static_cast<char>(!in_ideal[dep[l]]);
      }
      const HomologyProfile h = subset_homology(q, member, field);
      for (std::size_t t = 0; t < h.dims.size(); ++t) {
        if (h.dims[t] == 0) continue;
        const int i = use_koszul ? static_cast<int>(t) : q - 1 - static_cast<int>(t);
        partial[w][{i, q}] += h.dims[t];
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const Tally& t : partial) add_tally(table, t);
  return table;
}

BettiTable betti_hochster(const SqfIdeal& ideal, FieldSpec field) {
  require_proper(ideal);
  if (ideal.is_zero()) throw InvalidParameter("Betti routes need a nonzero ideal");
  const Compressed c = compress(ideal, kMaxHomologyVertices);
  const SqfIdeal local(c.size, c.gens);
  const SimplicialComplex delta = stanley_reisner_complex(local, c.size);
  BettiTable table(ideal.ambient());
  for (Mask sigma : lcm_lattice(c.gens)) {
    const int q = popcount(sigma);
    const HomologyProfile h = reduced_homology(restrict_complex(delta, sigma), field);
    for (int degree = -1; degree <= q; ++degree) {
      table.add(q - degree - 2, q, h.at(degree));
    }
  }
  return table;
}

BettiTable betti_facet_formula(const SqfIdeal& ideal, FieldSpec field) {
  require_proper(ideal);
  if (ideal.is_zero()) throw InvalidParameter("Betti routes need a nonzero ideal");
  const Compressed c = compress(ideal, kMaxHomologyVertices);
  const SimplicialComplex delta(low_mask(c.size), c.gens);
  BettiTable table(ideal.ambient());
  const std::size_t total = std::size_t{1} << c.size;
  for (std::size_t u = 1; u < total; ++u) {
    const SimplicialComplex gamma = induced_subcomplex(delta, u);
    if (gamma.is_void()) continue;
    const HomologyProfile h = reduced_homology(complement_complex(gamma, u), field);
    const int q = popcount(u);
    for (int p = 0; p <= q; ++p) table.add(p, q, h.at(p - 1));
  }
  return table;
}

BettiTable betti_taylor_oracle(const SqfIdeal& ideal, FieldSpec field) {
  require_proper(ideal);
  if (ideal.is_zero()) throw InvalidParameter("Betti routes need a nonzero ideal");
  const auto& gens = ideal.gens();
  const int g = static_cast<int>(gens.size());
  if (g > kMaxTaylorGenerators) throw CapExceeded("Taylor oracle limited to 12 generators");

  const std::uint32_t subsets = 1U << g;
  std::vector<Mask> lcm(subsets, 0);
  for (std::uint32_t s = 1; s < subsets; ++s) lcm[s] = lcm[s & (s - 1)] | gens[std::countr_zero(s)];
  std::map<Mask, std::vector<std::uint32_t>> strands;
  for (std::uint32_t s = 1; s < subsets; ++s) strands[lcm[s]].push_back(s);

  BettiTable table(ideal.ambient());
  for (const auto& [b, members] : strands) {
    // Basis in homological degree d (for R/I) = subsets of size d with lcm b.
    std::vector<std::vector<std::uint32_t>> basis(g + 1);
    for (std::uint32_t s : members) basis[std::popcount(s)].push_back(s);
    std::unordered_map<std::uint32_t, int> index;
    for (const auto& level : basis) {
      for (std::size_t i = 0; i < level.size(); ++i) index[level[i]] = static_cast<int>(i);
    }
    std::vector<int> rank(g + 2, 0);
    for (int d = 2; d <= g; ++d) {
      if (basis[d].empty() || basis[d - 1].empty()) continue;
      SparseMatrix m;
      m.rows = static_cast<int>(basis[d - 1].size());
      for (std::uint32_t s : basis[d]) {
        std::vector<std::pair<int, int>> col;
        int sign = 1;
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
          const std::uint32_t face = s ^ (rest & (~rest + 1));
          if (lcm[face] == b) col.emplace_back(index.at(face), sign);
          sign = -sign;
        }
        m.columns.push_back(std::move(col));
      }
      rank[d] = exact_rank(m, field);
    }
    for (int d = 1; d <= g; ++d) {
      const long long h = static_cast<long long>(basis[d].size()) - rank[d] - rank[d + 1];
      if (h < 0) throw std::logic_error("negative Taylor homology");
      table.add(d - 1, popcount(b), h);
    }
  }
  return table;
}

namespace {

int min_transversal(const std::vector<Mask>& gens, Mask chosen, int size, int best) {
  if (size >= best) return best;
  const auto open = std::find_if(gens.begin(), gens.end(), [chosen](Mask g) { return (g & chosen) == 0; });
  if (open == gens.end()) return size;
  for_each_bit(*open, [&](Vertex v) { best = min_transversal(gens, chosen | bit(v), size + 1, best); });
  return best;
}

}  // namespace

int krull_dim_quotient(const SqfIdeal& ideal) {
  require_proper(ideal);
  if (ideal.is_zero()) return ideal.ambient();
  return ideal.ambient() - min_transversal(ideal.gens(), 0, 0, popcount(ideal.support()) + 1);
}

InvariantBundle invariants_from_table(const SqfIdeal& ideal, const BettiTable& table) {
  require_proper(ideal);
  InvariantBundle b;
  b.ambient = ideal.ambient();
  b.reg = table.regularity();
  b.pd_quotient = ideal.is_zero() ? 0 : table.max_index() + 1;
  b.depth_quotient = b.ambient - b.pd_quotient;
  b.krull_dim_quotient = krull_dim_quotient(ideal);
  if (b.depth_quotient > b.krull_dim_quotient) throw std::logic_error("depth exceeds Krull dimension");
  b.is_cm = b.depth_quotient == b.krull_dim_quotient;
  b.linear_resolution = !ideal.is_zero() && ideal.is_equigenerated() && b.reg == ideal.min_degree();
  return b;
}

InvariantBundle compute_invariants(const SqfIdeal& ideal, FieldSpec field, int threads) {
  return invariants_from_table(ideal, betti_table(ideal, field, threads));
}

int regularity(const SqfIdeal& ideal, FieldSpec field) {
  require_proper(ideal);
  return betti_table(ideal, field).regularity();
}

int pd_quotient(const SqfIdeal& ideal, FieldSpec field) { return compute_invariants(ideal, field).pd_quotient; }

int depth_quotient(const SqfIdeal& ideal, FieldSpec field) {
  return compute_invariants(ideal, field).depth_quotient;
}

bool is_cohen_macaulay(const SqfIdeal& ideal, FieldSpec field) { return compute_invariants(ideal, field).is_cm; }

bool has_linear_resolution(const SqfIdeal& ideal, FieldSpec field) {
  require_proper(ideal);
  if (ideal.is_zero() || !ideal.is_equigenerated()) {
    throw InvalidParameter("linear resolution needs generators of a single degree");
  }
  return regularity(ideal, field) == ideal.min_degree();
}

}  // namespace sqfpow

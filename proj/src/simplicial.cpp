#include "sqfpow/simplicial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "sqfpow/errors.hpp"

namespace sqfpow {

namespace {

std::vector<Mask> maximal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa > pb : lex_less(a, b);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> kept;
  for (Mask s : sets) {
    if (std::none_of(kept.begin(), kept.end(), [s](Mask k) { return is_subset(s, k); })) {
      kept.push_back(s);
    }
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

Mask extract(Mask global, Mask vertex_set) {
  Mask local = 0;
  int i = 0;
  for_each_bit(vertex_set, [&](Vertex v) {
    if (contains(global, v)) local |= bit(i);
    ++i;
  });
  return local;
}

std::vector<char> local_faces(const SimplicialComplex& d) {
  const int s = popcount(d.vertex_set());
  if (s > kMaxHomologyVertices) {
    throw CapExceeded("complex has " + std::to_string(s) + " vertices; limit is " +
                      std::to_string(kMaxHomologyVertices));
  }
  std::vector<char> member(std::size_t{1} << s, 0);
  for (Mask f : d.facets()) member[extract(f, d.vertex_set())] = 1;
  for (int v = 0; v < s; ++v) {
    for (std::size_t m = 0; m < member.size(); ++m) {
      if (contains(m, v) && member[m]) member[m ^ bit(v)] = 1;
    }
  }
  return member;
}

template <typename Lookup>
SparseMatrix boundary_with(const std::vector<Mask>& sources, int target_count, Lookup&& row_of) {
  SparseMatrix m;
  m.rows = target_count;
  m.columns.resize(sources.size());
  for (std::size_t c = 0; c < sources.size(); ++c) {
    const Mask f = sources[c];
    auto& col = m.columns[c];
    col.reserve(popcount(f));
    int sign = 1;
    for_each_bit(f, [&](Vertex v) {
      col.emplace_back(row_of(f ^ bit(v)), sign);
      sign = -sign;
    });
  }
  return m;
}

void check_boundary_squared(const SparseMatrix& lower, const SparseMatrix& upper) {
  std::map<int, long long> acc;
  for (const auto& col : upper.columns) {
    acc.clear();
    for (const auto& [mid, a] : col) {
      for (const auto& [row, b] : lower.columns[mid]) acc[row] += static_cast<long long>(a) * b;
    }
    for (const auto& [row, v] : acc) {
      if (v != 0) throw std::logic_error("boundary map does not square to zero");
    }
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(Mask vertex_set, std::vector<Mask> facets) : vertex_set_(vertex_set) {
  for (Mask f : facets) {
    if (!is_subset(f, vertex_set)) throw InvalidParameter("facet leaves the vertex set");
  }
  facets_ = maximal_sets(std::move(facets));
}

bool SimplicialComplex::has_face(Mask face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](Mask f) { return is_subset(face, f); });
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int top = 0;
  for (Mask f : facets_) top = std::max(top, popcount(f));
  return top - 1;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  if (is_void()) return {};
  const std::vector<char> member = local_faces(*this);
  std::vector<long long> f(dimension() + 2, 0);
  for (std::size_t m = 0; m < member.size(); ++m) {
    if (member[m]) ++f[popcount(m)];
  }
  return f;
}

std::string SimplicialComplex::to_json() const {
  std::ostringstream out;
  out << "{\"vertices\": [";
  bool first = true;
  for_each_bit(vertex_set_, [&](Vertex v) {
    out << (first ? "" : ", ") << v + 1;
    first = false;
  });
  out << "], \"facets\": [";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    out << (i == 0 ? "[" : ", [");
    first = true;
    for_each_bit(facets_[i], [&](Vertex v) {
      out << (first ? "" : ", ") << v + 1;
      first = false;
    });
    out << ']';
  }
  out << "]}";
  return out.str();
}

long long HomologyProfile::at(int degree) const {
  const int t = degree + 1;
  if (t < 0 || t >= static_cast<int>(dims.size())) return 0;
  return dims[t];
}

long long HomologyProfile::total() const {
  long long sum = 0;
  for (long long d : dims) sum += d;
  return sum;
}

SimplicialComplex facet_complex(const SqfIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidParameter("facet complex of the unit ideal");
  return SimplicialComplex(ideal.support(), ideal.gens());
}

SimplicialComplex stanley_reisner_complex(const SqfIdeal& ideal, int ambient) {
  if (ideal.is_unit()) throw InvalidParameter("Stanley-Reisner complex of the unit ideal");
  if (ambient < ideal.ambient()) throw InvalidParameter("ambient ring smaller than the ideal's");
  if (ambient > kMaxHomologyVertices) throw CapExceeded("Stanley-Reisner complex limited to 24 variables");
  const std::size_t total = std::size_t{1} << ambient;
  std::vector<char> face(total);
  for (std::size_t m = 0; m < total; ++m) face[m] = ideal.contains(m) ? 0 : 1;
  std::vector<Mask> facets;
  for (std::size_t m = 0; m < total; ++m) {
    if (!face[m]) continue;
    bool maximal = true;
    for (Vertex v = 0; v < ambient && maximal; ++v) {
      if (!contains(m, v) && face[m | bit(v)]) maximal = false;
    }
    if (maximal) facets.push_back(m);
  }
  return SimplicialComplex(low_mask(ambient), std::move(facets));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, Mask u) {
  if (!is_subset(u, d.vertex_set())) throw InvalidParameter("subset leaves the vertex set");
  std::vector<Mask> kept;
  for (Mask f : d.facets()) {
    if (is_subset(f, u)) kept.push_back(f);
  }
  return SimplicialComplex(u, std::move(kept));
}

SimplicialComplex complement_complex(const SimplicialComplex& d, Mask u) {
  std::vector<Mask> facets;
  for (Mask f : d.facets()) {
    if (!is_subset(f, u)) throw InvalidParameter("facet not contained in U");
    facets.push_back(u & ~f);
  }
  return SimplicialComplex(u, std::move(facets));
}

SparseMatrix boundary_matrix(const std::vector<Mask>& sources, const std::vector<Mask>& targets) {
  std::unordered_map<Mask, int> index;
  for (std::size_t i = 0; i < targets.size(); ++i) index.emplace(targets[i], static_cast<int>(i));
  return boundary_with(sources, static_cast<int>(targets.size()), [&](Mask face) {
    const auto it = index.find(face);
    if (it == index.end()) throw InvalidParameter("boundary face missing from target list");
    return it->second;
  });
}

HomologyProfile subset_homology(int s, const std::vector<char>& member, FieldSpec field) {
  HomologyProfile out;
  out.characteristic = field.characteristic;
  if (member.size() != (std::size_t{1} << s)) throw InvalidParameter("membership table size mismatch");
  if (!member[0]) return out;

  std::vector<std::vector<Mask>> faces(s + 1);
  for (std::size_t m = 0; m < member.size(); ++m) {
    if (member[m]) faces[popcount(m)].push_back(m);
  }
  int top = s;
  while (faces[top].empty()) --top;
  std::vector<int> index(member.size(), -1);
  for (int t = 0; t <= top; ++t) {
    std::sort(faces[t].begin(), faces[t].end(), lex_less);
    for (std::size_t i = 0; i < faces[t].size(); ++i) index[faces[t][i]] = static_cast<int>(i);
  }
  const auto row_of = [&](Mask face) {
    const int r = index[face];
    if (r < 0) throw std::logic_error("membership table is not closed under subsets");
    return r;
  };

  // boundary[t] : faces with t vertices -> faces with t-1 vertices.
  std::vector<SparseMatrix> boundary(top + 2);
  for (int t = 1; t <= top; ++t) {
    boundary[t] = boundary_with(faces[t], static_cast<int>(faces[t - 1].size()), row_of);
  }
  for (int t = 1; t < top; ++t) check_boundary_squared(boundary[t], boundary[t + 1]);

  // Top-down with clearing: pivot rows of ∂_{t+1} index columns of ∂_t that
  // are already known to reduce to zero.
  std::vector<long long> rank(top + 2, 0);
  std::vector<int> cleared;
  for (int t = top; t >= 1; --t) {
    std::vector<char> skip(faces[t].size(), 0);
    for (int r : cleared) skip[r] = 1;
    const Elimination e = eliminate(boundary[t], field, skip);
    rank[t] = e.rank;
    cleared = e.pivot_rows;
  }

  out.dims.assign(top + 1, 0);
  long long euler_faces = 0;
  long long euler_homology = 0;
  for (int t = 0; t <= top; ++t) {
    const long long f = static_cast<long long>(faces[t].size());
    out.dims[t] = f - rank[t] - rank[t + 1];
    if (out.dims[t] < 0) throw std::logic_error("negative homology dimension");
    euler_faces += (t % 2 == 0 ? f : -f);
    euler_homology += (t % 2 == 0 ? out.dims[t] : -out.dims[t]);
  }
  if (euler_faces != euler_homology) throw std::logic_error("Euler characteristic mismatch");
  return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& d, FieldSpec field) {
  const std::vector<char> member = local_faces(d);
  return subset_homology(popcount(d.vertex_set()), member, field);
}

}  // namespace sqfpow

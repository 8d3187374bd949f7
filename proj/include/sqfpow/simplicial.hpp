#pragma once

#include <string>
#include <vector>

#include "sqfpow/bits.hpp"
#include "sqfpow/ideals.hpp"
#include "sqfpow/rank.hpp"

namespace sqfpow {

/// Complex given by facets over a vertex set. No facets is the void
/// complex; the single empty facet is the irrelevant complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps only inclusion-maximal facets. Throws if a facet leaves
  /// `vertex_set`.
  SimplicialComplex(Mask vertex_set, std::vector<Mask> facets);

  static SimplicialComplex void_complex(Mask vertex_set) { return {vertex_set, {}}; }
  static SimplicialComplex irrelevant(Mask vertex_set) { return {vertex_set, {Mask{0}}}; }

  Mask vertex_set() const { return vertex_set_; }
  const std::vector<Mask>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }
  bool has_face(Mask face) const;
  /// -1 for the irrelevant complex, -2 for the void complex.
  int dimension() const;
  /// f[t] = number of faces with t vertices.
  std::vector<long long> f_vector() const;

  std::string to_json() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  Mask vertex_set_ = 0;
  std::vector<Mask> facets_;
};

/// dims[t] = dim H̃_{t-1}, t = 0 .. dim + 1.
struct HomologyProfile {
  std::vector<long long> dims;
  int characteristic = kDefaultCharacteristic;

  /// dim H̃_degree, zero outside the stored range.
  long long at(int degree) const;
  long long total() const;
  bool operator==(const HomologyProfile&) const = default;
};

/// Largest vertex count reduced_homology accepts (faces are enumerated
/// over the subsets of the vertex set).
inline constexpr int kMaxHomologyVertices = 24;

SimplicialComplex facet_complex(const SqfIdeal& ideal);
SimplicialComplex stanley_reisner_complex(const SqfIdeal& ideal, int ambient);
SimplicialComplex induced_subcomplex(const SimplicialComplex& d, Mask u);
SimplicialComplex complement_complex(const SimplicialComplex& d, Mask u);

HomologyProfile reduced_homology(const SimplicialComplex& d, FieldSpec field);

/// Homology of a down-closed family of subsets of {0..s-1}; member[m]
/// says whether local mask m is a face. Checks the Euler characteristic
/// and that consecutive boundary maps compose to zero, throwing
/// std::logic_error otherwise.
HomologyProfile subset_homology(int s, const std::vector<char>& member, FieldSpec field);

/// ∂_t from faces with t vertices to faces with t-1 vertices, with the
/// faces of each size listed in lexicographic order.
SparseMatrix boundary_matrix(const std::vector<Mask>& sources, const std::vector<Mask>& targets);

}  // namespace sqfpow

#pragma once

#include "chains/length_vector.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chains {

// Abstract simplicial complex on labeled vertices from {1..m}. Stored by its
// facets (inclusion-maximal faces); vertices are exactly the labels appearing
// in some facet, so isolated vertices are singleton facets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Keeps the inclusion-maximal sets, drops duplicates and the empty set.
  static SimplicialComplex from_faces(const std::vector<Mask>& faces);

  const std::vector<Mask>& facets() const { return facets_; }
  Mask vertex_mask() const { return vertices_; }
  int vertex_count() const { return popcount(vertices_); }
  bool empty() const { return facets_.empty(); }
  int max_label() const;

  bool is_face(Mask f) const;              // nonempty f contained in some facet
  std::vector<Mask> all_faces() const;     // nonempty faces, ascending by mask

  // Entry k-1 = number of faces with k vertices (so front() counts vertices).
  std::vector<long long> f_vector() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<Mask> facets_;  // ascending by mask
  Mask vertices_ = 0;
};

int connected_components(const SimplicialComplex& c);

std::vector<long long> component_sizes(const SimplicialComplex& c);  // descending

std::vector<long long> degree_sequence(const SimplicialComplex& c);  // descending 1-skeleton degrees

struct IsoCertificate {
  bool isomorphic = false;
  // When isomorphic: pairs (v in first, image in second), ascending by v.
  std::vector<std::pair<int, int>> bijection;
  // When not: the invariant that separates the two, with both rendered values.
  std::string invariant;
  std::string left_value;
  std::string right_value;

  std::string describe() const;
};

// Exact isomorphism test: invariant screening (vertex count, f-vector,
// component structure, degree sequence) then backtracking over compatible
// vertex assignments. Returned bijections are re-verified on every facet.
IsoCertificate are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

// Relabeling-invariant normal form: the minimum over all vertex relabelings
// 1..v of the sorted facet-mask list. Equal forms <=> isomorphic.
std::vector<Mask> canonical_form(const SimplicialComplex& c);

// Applies a vertex bijection and checks it maps the facet set of `a` exactly
// onto the facet set of `b`.
bool verify_bijection(const SimplicialComplex& a, const SimplicialComplex& b,
                      const std::vector<std::pair<int, int>>& bijection);

}  // namespace chains

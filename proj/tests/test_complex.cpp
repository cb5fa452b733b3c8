#include <doctest.h>

#include "chains/complex.hpp"
#include "chains/subsets.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace chains;

namespace {

// Applies a relabeling given as the image of each vertex 1..n.
SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& image) {
  std::vector<Mask> faces;
  for (Mask facet : c.facets()) {
    Mask out = 0;
    for (int v : mask_elements(facet)) out |= Mask(1) << (image[std::size_t(v - 1)] - 1);
    faces.push_back(out);
  }
  return SimplicialComplex::from_faces(faces);
}

SimplicialComplex spider(std::vector<int> legs) {
  // Star-shaped tree: vertex 1 in the middle, each leg a path hanging off it.
  std::vector<Mask> faces;
  int next = 2;
  for (int len : legs) {
    int prev = 1;
    for (int step = 0; step < len; ++step) {
      faces.push_back(mask_of({prev, next}));
      prev = next++;
    }
  }
  return SimplicialComplex::from_faces(faces);
}

}  // namespace

TEST_CASE("from_faces keeps only maximal faces") {
  auto c = SimplicialComplex::from_faces({mask_of({1}), mask_of({1, 2}), mask_of({2, 3}),
                                          mask_of({3}), mask_of({1, 2}), 0});
  CHECK(c.facets() == std::vector<Mask>{mask_of({1, 2}), mask_of({2, 3})});
  CHECK(c.vertex_count() == 3);
  CHECK(c.max_label() == 3);

  CHECK(SimplicialComplex::from_faces({}).empty());
  CHECK(SimplicialComplex::from_faces({0}).empty());
}

TEST_CASE("faces and f-vectors") {
  auto solid = SimplicialComplex::from_faces({mask_of({1, 2, 3})});
  CHECK(solid.is_face(mask_of({1})));
  CHECK(solid.is_face(mask_of({2, 3})));
  CHECK(solid.is_face(mask_of({1, 2, 3})));
  CHECK_FALSE(solid.is_face(mask_of({4})));
  CHECK_FALSE(solid.is_face(0));
  CHECK(solid.all_faces() == std::vector<Mask>{1, 2, 3, 4, 5, 6, 7});
  CHECK(solid.f_vector() == std::vector<long long>{3, 3, 1});

  auto hollow = SimplicialComplex::from_faces(
      {mask_of({1, 2}), mask_of({2, 3}), mask_of({1, 3})});
  CHECK_FALSE(hollow.is_face(mask_of({1, 2, 3})));
  CHECK(hollow.f_vector() == std::vector<long long>{3, 3});

  CHECK(SimplicialComplex::from_faces({}).f_vector().empty());
}

TEST_CASE("vertex labels need not be contiguous") {
  auto c = SimplicialComplex::from_faces({mask_of({3, 7})});
  CHECK(c.vertex_count() == 2);
  CHECK(c.max_label() == 7);
  CHECK(c.f_vector() == std::vector<long long>{2, 1});
}

TEST_CASE("connected components") {
  CHECK(connected_components(SimplicialComplex::from_faces({})) == 0);

  auto path = SimplicialComplex::from_faces({mask_of({1, 2}), mask_of({2, 3})});
  CHECK(connected_components(path) == 1);
  CHECK(component_sizes(path) == std::vector<long long>{3});

  auto two = SimplicialComplex::from_faces({mask_of({1, 2}), mask_of({3, 4})});
  CHECK(connected_components(two) == 2);
  CHECK(component_sizes(two) == std::vector<long long>{2, 2});

  // The short-set complex of the pinned vector: a hollow triangle plus a point.
  auto sh = SimplicialComplex::from_faces(sh_faces(LengthVector::parse("1,1,1,2,3,3")));
  CHECK(sh.facets() ==
        std::vector<Mask>{mask_of({1, 2}), mask_of({1, 3}), mask_of({2, 3}), mask_of({4})});
  CHECK(connected_components(sh) == 2);
  CHECK(component_sizes(sh) == std::vector<long long>{3, 1});
}

TEST_CASE("degree sequences") {
  auto hollow = SimplicialComplex::from_faces(
      {mask_of({1, 2}), mask_of({2, 3}), mask_of({1, 3})});
  CHECK(degree_sequence(hollow) == std::vector<long long>{2, 2, 2});

  auto star = SimplicialComplex::from_faces(
      {mask_of({1, 2}), mask_of({1, 3}), mask_of({1, 4})});
  CHECK(degree_sequence(star) == std::vector<long long>{3, 1, 1, 1});

  auto with_point = SimplicialComplex::from_faces(
      {mask_of({1, 2}), mask_of({2, 3}), mask_of({1, 3}), mask_of({4})});
  CHECK(degree_sequence(with_point) == std::vector<long long>{2, 2, 2, 0});

  // Triangles contribute edges through their skeleton, counted once.
  auto solid = SimplicialComplex::from_faces({mask_of({1, 2, 3}), mask_of({1, 2})});
  CHECK(degree_sequence(solid) == std::vector<long long>{2, 2, 2});
}

TEST_CASE("isomorphic relabelings are recognized") {
  std::mt19937 rng(511);
  std::vector<SimplicialComplex> pool = {
      SimplicialComplex::from_faces({mask_of({1, 2, 3}), mask_of({3, 4}), mask_of({5})}),
      SimplicialComplex::from_faces({mask_of({1, 2}), mask_of({2, 3}), mask_of({3, 4}),
                                     mask_of({4, 1})}),
      spider({2, 1, 2}),
      SimplicialComplex::from_faces(sh_faces(LengthVector::parse("1,1,1,2,3,3"))),
  };
  for (const auto& c : pool) {
    std::vector<int> image(std::size_t(c.max_label()));
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = int(i) + 1;
    for (int trial = 0; trial < 6; ++trial) {
      std::shuffle(image.begin(), image.end(), rng);
      auto shuffled = relabel(c, image);
      auto cert = are_isomorphic(c, shuffled);
      CHECK(cert.isomorphic);
      CHECK(verify_bijection(c, shuffled, cert.bijection));
      CHECK(cert.describe() == "isomorphic");
      CHECK(canonical_form(c) == canonical_form(shuffled));
    }
  }
}

TEST_CASE("invariant screening names the separating invariant") {
  auto edge = SimplicialComplex::from_faces({mask_of({1, 2})});
  auto point_pair = SimplicialComplex::from_faces({mask_of({1}), mask_of({2})});
  auto cert = are_isomorphic(edge, point_pair);
  CHECK_FALSE(cert.isomorphic);
  CHECK(cert.invariant == "f-vector");
  CHECK(cert.describe() == "not isomorphic: f-vector (2,1) != (2)");

  auto three = SimplicialComplex::from_faces({mask_of({1, 2, 3})});
  CHECK(are_isomorphic(edge, three).invariant == "vertex count");

  auto path = SimplicialComplex::from_faces({mask_of({1, 2}), mask_of({2, 3}), mask_of({3, 4})});
  auto split = SimplicialComplex::from_faces({mask_of({1, 2}), mask_of({2, 3}), mask_of({4, 5})});
  auto path_cert = are_isomorphic(path, split);
  CHECK(path_cert.invariant == "vertex count");

  auto star = SimplicialComplex::from_faces({mask_of({1, 2}), mask_of({1, 3}), mask_of({1, 4})});
  auto chain = SimplicialComplex::from_faces({mask_of({1, 2}), mask_of({2, 3}), mask_of({3, 4})});
  CHECK(are_isomorphic(star, chain).invariant == "degree sequence");

  auto cycle_point = SimplicialComplex::from_faces(
      {mask_of({1, 2}), mask_of({2, 3}), mask_of({1, 3}), mask_of({4})});
  CHECK(are_isomorphic(cycle_point, chain).invariant == "component count");

  auto short_path_point = SimplicialComplex::from_faces(
      {mask_of({1, 2}), mask_of({2, 3}), mask_of({4})});
  auto two_edges = SimplicialComplex::from_faces({mask_of({1, 2}), mask_of({3, 4})});
  CHECK(are_isomorphic(short_path_point, two_edges).invariant == "component sizes");
}

TEST_CASE("spider trees with equal degree sequences still separate") {
  // Both have degrees (3,2,2,1,1,1); only an actual search can tell them apart.
  auto a = spider({2, 1, 2});
  auto b = spider({1, 1, 3});
  CHECK(degree_sequence(a) == degree_sequence(b));
  CHECK(a.f_vector() == b.f_vector());
  auto cert = are_isomorphic(a, b);
  CHECK_FALSE(cert.isomorphic);
  CHECK(cert.invariant == "exhausted-search");
  CHECK(cert.describe() ==
        "not isomorphic: backtracking search exhausted all candidate bijections");
  CHECK(canonical_form(a) != canonical_form(b));
}

TEST_CASE("isomorphism is reflexive and symmetric") {
  std::vector<SimplicialComplex> pool = {
      SimplicialComplex::from_faces({}),
      SimplicialComplex::from_faces({mask_of({1})}),
      SimplicialComplex::from_faces({mask_of({3})}),
      SimplicialComplex::from_faces({mask_of({1, 2})}),
      spider({2, 1, 2}),
      spider({1, 1, 3}),
      SimplicialComplex::from_faces({mask_of({1, 2, 3}), mask_of({4})}),
  };
  for (const auto& a : pool) {
    auto self = are_isomorphic(a, a);
    CHECK(self.isomorphic);
    for (const auto& b : pool) {
      auto ab = are_isomorphic(a, b);
      auto ba = are_isomorphic(b, a);
      CHECK(ab.isomorphic == ba.isomorphic);
      CHECK(ab.isomorphic == (canonical_form(a) == canonical_form(b)));
      if (ab.isomorphic) CHECK(verify_bijection(a, b, ab.bijection));
    }
  }
}

TEST_CASE("canonical_form relabels to an initial segment") {
  auto lone = SimplicialComplex::from_faces({mask_of({3})});
  auto other = SimplicialComplex::from_faces({mask_of({7})});
  CHECK(canonical_form(lone) == std::vector<Mask>{mask_of({1})});
  CHECK(canonical_form(lone) == canonical_form(other));
  CHECK(canonical_form(SimplicialComplex::from_faces({})).empty());
}

TEST_CASE("verify_bijection rejects wrong maps") {
  auto path = SimplicialComplex::from_faces({mask_of({1, 2}), mask_of({2, 3})});
  CHECK(verify_bijection(path, path, {{1, 1}, {2, 2}, {3, 3}}));
  CHECK(verify_bijection(path, path, {{1, 3}, {2, 2}, {3, 1}}));
  // Swapping an end with the middle breaks the edge set.
  CHECK_FALSE(verify_bijection(path, path, {{1, 2}, {2, 1}, {3, 3}}));
  // Incomplete maps fail rather than crash.
  CHECK_FALSE(verify_bijection(path, path, {{1, 1}, {2, 2}}));
}

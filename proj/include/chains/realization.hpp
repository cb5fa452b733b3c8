#pragma once

#include "chains/cohomology.hpp"
#include "chains/complex.hpp"
#include "chains/lp.hpp"
#include "chains/subsets.hpp"

#include <optional>

namespace chains {

// Inverse problem: is the given complex the short-set complex of some generic
// length vector? n_short=false asks for the chamber with {n} long, which
// forces an empty target. require_ascending additionally pins the witness to
// have ascending first n-1 entries, which makes witnesses canonical per
// chamber; enumeration relies on it.
struct RealizationProblem {
  int n = 0;
  bool n_short = true;
  SimplicialComplex target;
  bool require_dominated = false;
  bool require_ascending = false;
};

struct RealizationResult {
  bool feasible = false;
  std::optional<LengthVector> witness;
  Rational slack = 0;  // maximal margin by which every strict inequality holds
};

// Decides feasibility of the open polyhedron (facets short, minimal non-faces
// long, entries positive, optional dominance/ascending), via exact simplex on
// the margin-maximization form with total fixed to 1. Feasible results carry
// a verified witness: genericity, the face family, and every requested flag
// are recomputed from scratch before returning.
RealizationResult realize(const RealizationProblem& p);

// All realizable genetic codes for this n, up to permutation of {1..n-1},
// deduplicated by canonical form, sorted for deterministic output. Candidate
// antichains are grown in a linear extension of the shift order; a branch is
// abandoned once its genes alone cannot all be short.
std::vector<ChamberCode> enumerate_chambers(int n, bool dominated_only);

// Chamber-level isomorphism: the short-set families agree up to relabeling,
// including whether the empty set is short (a_0). Distinguishes the empty
// chain space from the sphere chamber, which bare complex isomorphism cannot.
IsoCertificate chamber_isomorphic(bool n_short1, const SimplicialComplex& c1,
                                  bool n_short2, const SimplicialComplex& c2);

struct EquivalenceReport {
  std::string verdict;  // "diffeomorphic" | "not diffeomorphic" | "undecided-by-this-theory"
  bool dominated1 = false;
  bool dominated2 = false;
  IsoCertificate certificate;
  BettiTable betti1;
  BettiTable betti2;
  bool betti_comparable = false;  // both tables carry ranks
  bool betti_equal = false;
};

// Diffeomorphism-type decision for dominated generic vectors: the chamber
// isomorphism class decides it. Non-dominated (but generic) input downgrades
// the verdict to "undecided-by-this-theory" with the invariants still
// reported. Throws on d < 3 or non-generic input.
EquivalenceReport equivalent(const LengthVector& l1, const LengthVector& l2, int d);

}  // namespace chains

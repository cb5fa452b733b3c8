#pragma once

#include "chains/length_vector.hpp"

#include <vector>

namespace chains {

// Shift order on subsets of {1..n-1}: K is below J when K can be reached from
// J by dropping elements and sliding elements down. Equivalently, with both
// written in descending order, |K| <= |J| and the i-th largest of K never
// exceeds the i-th largest of J. Sh-families of ascending-sorted vectors are
// closed downward under this order, which is what makes genetic codes small.
bool shift_below(Mask k, Mask j);

std::vector<int> descending_elements(Mask m);

// Genetic code of a chamber: the shift-order-maximal faces of the short-set
// complex after sorting the first n-1 entries ascending. genes holds those
// maximal faces in render order; the mask 0 appears as the only gene exactly
// when {n} is short but no larger short set contains n (code "<n>"); genes is
// empty exactly when {n} is long (code "<>").
struct ChamberCode {
  int n = 0;
  bool n_short = false;
  std::vector<Mask> genes;

  bool operator==(const ChamberCode&) const = default;
};

// Render-order comparison of genes: compare descending element tuples
// lexicographically, shorter tuple first on ties.
bool gene_render_less(Mask a, Mask b);

// Orders whole codes for deterministic listings.
bool code_less(const ChamberCode& a, const ChamberCode& b);

// All short subsets of {1..n}, ascending by mask. Size 2^(n-1) for generic l.
std::vector<Mask> short_family(const LengthVector& l);

// Faces of the short-set complex: nonempty J in {1..n-1} with J u {n} short.
// Ascending by mask.
std::vector<Mask> sh_faces(const LengthVector& l);

ChamberCode genetic_code(const LengthVector& l);

// a_k = number of k-element subsets J of {1..n-1} with J u {n} short
// (a_0 counts the empty set, so it is 1 iff {n} is short). Length n-1.
std::vector<long long> a_vector(const LengthVector& l);

// Expands a code back to the full face list (nonempty faces, ascending by
// mask) by walking drop/slide-down moves from each gene.
std::vector<Mask> code_down_closure(const ChamberCode& code);

// "<632,64>", "<4>", "<>"; elements of each gene joined with n first in
// descending order, dot-separated once labels reach 10.
std::string render_code(const ChamberCode& code);

// Inverse of render_code; also accepts the bare body without the brackets.
ChamberCode parse_code(const std::string& text, int n);

}  // namespace chains

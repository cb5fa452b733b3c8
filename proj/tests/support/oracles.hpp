#pragma once

#include "chains/length_vector.hpp"
#include "chains/subsets.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace chains::testing {

// Plain rational-sum comparison, no scaling tricks: the reference the
// bitmask walkers are checked against.
inline SubsetClass classify_brute(const LengthVector& l, Mask subset) {
  Rational sum = 0;
  for (int i = 1; i <= l.n(); ++i)
    if (mask_contains(subset, i)) sum += l.at(i);
  Rational rest = l.total() - sum;
  if (sum < rest) return SubsetClass::Short;
  if (sum > rest) return SubsetClass::Long;
  return SubsetClass::Degenerate;
}

inline bool generic_brute(const LengthVector& l) {
  Mask limit = full_mask(l.n());
  for (Mask m = 0; m <= limit; ++m)
    if (classify_brute(l, m) == SubsetClass::Degenerate) return false;
  return true;
}

// Faces of the short-set complex by direct enumeration over all subsets.
inline std::vector<Mask> sh_faces_brute(const LengthVector& l) {
  Mask nbit = Mask(1) << (l.n() - 1);
  std::vector<Mask> faces;
  for (Mask j = 1; j < nbit; ++j)
    if (classify_brute(l, j | nbit) == SubsetClass::Short) faces.push_back(j);
  return faces;
}

// Random generic vector with entries p/q, p in 1..max_num, q in 1..max_den.
inline LengthVector random_generic(std::mt19937& rng, int n, int max_num = 24,
                                   int max_den = 4) {
  std::uniform_int_distribution<int> num(1, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  for (;;) {
    std::vector<Rational> entries;
    for (int i = 0; i < n; ++i) entries.push_back(Rational(num(rng), den(rng)));
    LengthVector l(std::move(entries));
    if (is_generic(l)) return l;
  }
}

// Same, but the last entry is forced to the maximum.
inline LengthVector random_generic_dominated(std::mt19937& rng, int n, int max_num = 24,
                                             int max_den = 4) {
  std::uniform_int_distribution<int> num(1, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  for (;;) {
    std::vector<Rational> entries;
    Rational top = 0;
    for (int i = 0; i + 1 < n; ++i) {
      Rational e(num(rng), den(rng));
      if (e > top) top = e;
      entries.push_back(e);
    }
    entries.push_back(top);
    LengthVector l(std::move(entries));
    if (is_generic(l)) return l;
  }
}

// Chamber codes hit by integer length vectors with ascending first n-1
// entries and all entries in 1..bound. Every chamber is an open rational
// cone, so for a large enough bound the scan finds them all; the calibrated
// bounds (stable well before 8) are pinned in the tests that use this.
struct GridCodes {
  std::set<std::string> all;
  std::set<std::string> dominated;
};

inline GridCodes grid_codes(int n, int bound) {
  GridCodes out;
  std::vector<int> v(static_cast<std::size_t>(n), 1);
  for (;;) {
    bool ascending = true;
    for (int i = 0; i + 2 < n; ++i)
      if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(i) + 1]) {
        ascending = false;
        break;
      }
    if (ascending) {
      std::vector<Rational> entries;
      for (int x : v) entries.emplace_back(x);
      LengthVector l(std::move(entries));
      if (is_generic(l)) {
        std::string code = render_code(genetic_code(l));
        out.all.insert(code);
        if (is_dominated(l)) out.dominated.insert(code);
      }
    }
    int i = n - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == bound) v[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace chains::testing

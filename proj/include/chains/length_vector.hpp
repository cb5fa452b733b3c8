#pragma once

#include "chains/rational.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace chains {

// Subsets of {1..n} as bit masks: bit i (value 1u << i) stands for element i+1.
// All enumeration code sticks to this 1-based convention.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return (n >= 32) ? ~Mask(0) : ((Mask(1) << n) - 1); }
inline bool mask_contains(Mask m, int element) { return (m >> (element - 1)) & 1u; }
inline Mask mask_of(std::initializer_list<int> elements) {
  Mask m = 0;
  for (int e : elements) m |= Mask(1) << (e - 1);
  return m;
}
std::vector<int> mask_elements(Mask m);           // ascending, 1-based
std::string mask_to_string(Mask m);               // "{2,3,6}"

// Subset enumeration is exponential in n; the cap keeps accidental huge runs
// from hanging the process. Raise it explicitly (CLI --max-n / CHAINS_MAX_N).
int max_supported_n();
void set_max_supported_n(int n);                  // clamped to [3, 30]
void require_supported_n(int n);                  // throws std::invalid_argument

enum class SubsetClass { Short, Long, Degenerate };

class LengthVector {
 public:
  explicit LengthVector(std::vector<Rational> entries);

  // Accepts "1,1,1,2,3,3" (entries may be fractions or decimals) or a JSON
  // array of strings/numbers: ["1","1","1/4"].
  static LengthVector parse(const std::string& text);

  int n() const { return static_cast<int>(entries_.size()); }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& at(int i) const;                // 1-based
  const Rational& total() const { return total_; }

  // Integer view: entries multiplied by the common denominator. Subset-sum
  // comparisons use these; the int64 mirror is valid only when fits64().
  const std::vector<Int>& scaled() const { return scaled_; }
  const Int& scaled_total() const { return scaled_total_; }
  bool fits64() const { return fits64_; }
  const std::vector<std::int64_t>& scaled64() const { return scaled64_; }
  std::int64_t scaled_total64() const { return scaled_total64_; }

  std::string to_string() const;

 private:
  std::vector<Rational> entries_;
  Rational total_;
  std::vector<Int> scaled_;
  Int scaled_total_;
  bool fits64_ = false;
  std::vector<std::int64_t> scaled64_;
  std::int64_t scaled_total64_ = 0;
};

SubsetClass classify_subset(const LengthVector& l, Mask subset);

bool is_generic(const LengthVector& l);

// Degenerate subsets not containing n, ascending by mask, capped at `limit`
// (each balanced pair J, complement(J) is reported once, via the side without n).
std::vector<Mask> degenerate_subsets(const LengthVector& l, std::size_t limit = 16);

bool is_dominated(const LengthVector& l);

// Ascending sort of the first n-1 entries; the last entry stays in place.
LengthVector normalize(const LengthVector& l);

// perm[i-1] = position of old entry i in normalize(l), 1-based; perm[n-1] = n.
// Stable, so equal entries keep their original order.
std::vector<int> normalize_permutation(const LengthVector& l);

// Dimension of the chain space built from n segments in R^d: (n-2)(d-1)-1.
int dimension(int n, int d);

}  // namespace chains

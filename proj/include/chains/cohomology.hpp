#pragma once

#include "chains/complex.hpp"
#include "chains/length_vector.hpp"
#include "chains/subsets.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace chains {

// Rank table of H^*(C^n_d(l); Z). The closed-form ranks hold only for
// dominated generic vectors; otherwise the table is returned flagged and
// rank-free rather than silently wrong.
struct BettiTable {
  int n = 0;
  int d = 0;
  int dim = 0;
  bool dominated_valid = false;
  std::vector<long long> ranks;  // indexed 0..dim when dominated_valid
};

// d >= 3 only; throws on d < 3, non-generic l. Non-dominated input yields
// dominated_valid=false with empty ranks.
BettiTable betti_numbers(const LengthVector& l, int d);

long long euler_characteristic(const BettiTable& table);

// The subring of H^*(C^n_d(l); Z2) in degrees divisible by d-1, presented on
// its monomial basis: one basis element X_J per short set J u {n}, X_J in
// degree |J|(d-1). Products are X_J X_K = X_{J u K} when J, K are disjoint
// and the union is again a basis set, else 0. The empty chain space gives the
// zero ring (no basis at all, not even a unit).
class GradedRing {
 public:
  GradedRing() = default;
  GradedRing(int n, int grade_unit, bool n_short, std::vector<Mask> basis);

  int n() const { return n_; }
  int grade_unit() const { return grade_unit_; }
  bool n_short() const { return n_short_; }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Mask>& basis() const { return basis_; }  // ascending; 0 = the unit
  bool has_monomial(Mask m) const;

  // Zero products come back as nullopt; mask 0 is the unit monomial.
  std::optional<Mask> product(Mask a, Mask b) const;

  std::vector<long long> graded_dims() const;  // entry s = dim in degree s*(d-1), length n-1

  // Count of ordered basis pairs with nonzero product (= sum over basis sets
  // of 2^|J|, since a set splits into two disjoint halves in 2^|J| ways).
  long long nonzero_product_count() const;

  // Unordered nonzero products (a <= b) as triples (a, b, a|b); meant for
  // serialization, so callers should check the basis is reasonably small.
  std::vector<std::tuple<Mask, Mask, Mask>> product_triples() const;

 private:
  int n_ = 0;
  int grade_unit_ = 0;
  bool n_short_ = false;
  std::vector<Mask> basis_;
};

GradedRing ring_presentation(const LengthVector& l, int d);

// Graded-ring isomorphism reduces to simplicial isomorphism of the underlying
// complexes (plus the zero-ring check); the returned bijection is the variable
// substitution inducing the ring map.
IsoCertificate rings_isomorphic(const GradedRing& r1, const GradedRing& r2,
                                const SimplicialComplex& c1, const SimplicialComplex& c2);

enum class MorseFunction { GOnV, FPrimeOnZPrime };

struct CriticalPoint {
  Mask set = 0;       // over {1..n}
  int index = 0;
  std::string signs;  // i-th char: sign of the i-th segment along e_1
};

struct MorseInventory {
  MorseFunction function = MorseFunction::GOnV;
  int n = 0;
  int d = 0;
  long long total = 0;
  std::vector<std::pair<int, long long>> counts_by_index;  // ascending by index
  bool points_complete = false;  // false when total exceeded the cap
  std::vector<CriticalPoint> points;                       // ascending by set mask
};

// g on V: one critical point per short set containing n, index (d-1)(|J|-1).
// f' on Z': one per long set, index (d-1)(n-|J|). Point lists are materialized
// only up to max_points; counts are always complete.
MorseInventory morse_inventory(const LengthVector& l, int d, MorseFunction which,
                               std::size_t max_points = 4096);

// Mod-2 intersection number of the dual cell classes indexed by J and K:
// 1 exactly when J and K overlap in {n} alone. Requires n in both sets and
// |J| + |K| = n + 1.
int intersection_pairing(int n, Mask j, Mask k);

// Matrix of intersection_pairing over rows {J containing n, |J| = n-k} and
// columns {K containing n, |K| = k+1}, both ascending by mask. Always a
// permutation matrix, realized by complementation within {1..n-1}.
std::vector<std::vector<int>> pairing_matrix(int n, int k);

}  // namespace chains

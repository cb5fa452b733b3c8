#include "chains/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace chains {

namespace {

void require_generic(const LengthVector& l, const char* op) {
  if (!is_generic(l))
    throw std::invalid_argument(std::string(op) +
                                " requires a generic length vector (some subset balances its complement)");
}

}  // namespace

BettiTable betti_numbers(const LengthVector& l, int d) {
  if (d < 3)
    throw std::invalid_argument(
        "Betti ranks need d >= 3; the planar case follows different rules and is not computed here");
  require_generic(l, "betti_numbers");
  BettiTable table;
  table.n = l.n();
  table.d = d;
  table.dim = dimension(l.n(), d);
  table.dominated_valid = is_dominated(l);
  if (!table.dominated_valid) return table;

  auto a = a_vector(l);
  const int n = l.n();
  table.ranks.assign(static_cast<std::size_t>(table.dim) + 1, 0);
  for (int s = 0; s <= n - 3; ++s)
    table.ranks[static_cast<std::size_t>(s * (d - 1))] = a[static_cast<std::size_t>(s)];
  for (int s = 0; s <= n - 2; ++s) {
    int idx = s * (d - 1) - 1;
    long long value = a[static_cast<std::size_t>(n - s - 2)];
    if (idx < 0) {
      // s = 0 pairs with a_{n-2}, which vanishes for dominated vectors:
      // a size-(n-2) short set plus n would force the leftover singleton
      // past half the total, above l_n.
      if (value != 0)
        throw std::logic_error("dominated vector with a nonzero top a-entry");
      continue;
    }
    table.ranks[static_cast<std::size_t>(idx)] = value;
  }
  return table;
}

long long euler_characteristic(const BettiTable& table) {
  if (!table.dominated_valid)
    throw std::invalid_argument("Euler characteristic needs a rank-valid (dominated) table");
  long long chi = 0;
  for (std::size_t k = 0; k < table.ranks.size(); ++k)
    chi += (k % 2 == 0) ? table.ranks[k] : -table.ranks[k];
  return chi;
}

GradedRing::GradedRing(int n, int grade_unit, bool n_short, std::vector<Mask> basis)
    : n_(n), grade_unit_(grade_unit), n_short_(n_short), basis_(std::move(basis)) {
  std::sort(basis_.begin(), basis_.end());
}

bool GradedRing::has_monomial(Mask m) const {
  return std::binary_search(basis_.begin(), basis_.end(), m);
}

std::optional<Mask> GradedRing::product(Mask a, Mask b) const {
  if (!has_monomial(a) || !has_monomial(b))
    throw std::invalid_argument("product arguments must be basis monomials");
  if (a & b) return std::nullopt;  // shared variable squares to zero
  Mask u = a | b;
  if (!has_monomial(u)) return std::nullopt;
  return u;
}

std::vector<long long> GradedRing::graded_dims() const {
  std::vector<long long> dims(static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0), 0);
  for (Mask m : basis_) ++dims[static_cast<std::size_t>(popcount(m))];
  return dims;
}

long long GradedRing::nonzero_product_count() const {
  long long count = 0;
  for (Mask m : basis_) count += 1LL << popcount(m);
  return count;
}

std::vector<std::tuple<Mask, Mask, Mask>> GradedRing::product_triples() const {
  std::vector<std::tuple<Mask, Mask, Mask>> out;
  for (Mask m : basis_) {
    for (Mask sub = m;; sub = (sub - 1) & m) {
      Mask other = m ^ sub;
      if (sub <= other) out.emplace_back(sub, other, m);
      if (sub == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradedRing ring_presentation(const LengthVector& l, int d) {
  if (d < 3)
    throw std::invalid_argument(
        "ring presentation needs d >= 3; the planar case follows different rules and is not computed here");
  require_generic(l, "ring_presentation");
  if (!is_dominated(l))
    throw std::invalid_argument(
        "ring presentation needs a dominated vector; the monomial model does not apply otherwise");
  auto faces = sh_faces(l);
  bool n_short = classify_subset(l, Mask(1) << (l.n() - 1)) == SubsetClass::Short;
  std::vector<Mask> basis;
  basis.reserve(faces.size() + 1);
  if (n_short) basis.push_back(0);
  basis.insert(basis.end(), faces.begin(), faces.end());
  return GradedRing(l.n(), d - 1, n_short, std::move(basis));
}

IsoCertificate rings_isomorphic(const GradedRing& r1, const GradedRing& r2,
                                const SimplicialComplex& c1, const SimplicialComplex& c2) {
  if (r1.grade_unit() != r2.grade_unit())
    throw std::invalid_argument("graded rings have different grade units");
  auto check_pairing = [](const GradedRing& r, const SimplicialComplex& c) {
    std::vector<Mask> faces = c.all_faces();
    std::vector<Mask> expected;
    if (r.n_short()) expected.push_back(0);
    expected.insert(expected.end(), faces.begin(), faces.end());
    if (expected != r.basis())
      throw std::invalid_argument("ring basis does not match the supplied complex");
  };
  check_pairing(r1, c1);
  check_pairing(r2, c2);

  IsoCertificate cert;
  if (r1.is_zero() != r2.is_zero()) {
    cert.invariant = "graded dimension at degree 0";
    cert.left_value = std::to_string(r1.is_zero() ? 0 : 1);
    cert.right_value = std::to_string(r2.is_zero() ? 0 : 1);
    return cert;
  }
  if (r1.is_zero() && r2.is_zero()) {
    cert.isomorphic = true;
    return cert;
  }
  if (r1.graded_dims() != r2.graded_dims()) {
    auto render = [](const std::vector<long long>& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
      }
      return s + ")";
    };
    cert.invariant = "graded dimensions";
    cert.left_value = render(r1.graded_dims());
    cert.right_value = render(r2.graded_dims());
    return cert;
  }
  return are_isomorphic(c1, c2);
}

namespace {

std::string sign_pattern(Mask j, int n) {
  // kappa_J(i) = -1 on J; the critical configuration points along e_1 with
  // sign kappa when n is in J and -kappa when it is not.
  bool flip = !mask_contains(j, n);
  std::string out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    bool negative = mask_contains(j, i) != flip;
    out.push_back(negative ? '-' : '+');
  }
  return out;
}

template <typename Num>
void collect_morse(const std::vector<Num>& scaled, const Num& total, int n, int d,
                   MorseFunction which, std::size_t max_points, MorseInventory& inv) {
  // Walk subsets of {1..n-1}; J' pairs with J' u {n} (for g) or both J' and
  // its complement-with-n (for f', where exactly one of J', J' u {n} is long).
  const Num ln = scaled[static_cast<std::size_t>(n - 1)];
  std::vector<std::pair<int, Mask>> kept;
  std::vector<long long> by_index;
  auto bump = [&](int index) {
    if (by_index.size() <= static_cast<std::size_t>(index))
      by_index.resize(static_cast<std::size_t>(index) + 1, 0);
    ++by_index[static_cast<std::size_t>(index)];
  };
  const Mask nbit = Mask(1) << (n - 1);
  const std::uint64_t count = std::uint64_t(1) << (n - 1);
  Num sum = 0;
  Mask gray = 0;
  for (std::uint64_t step = 0;; ++step) {
    // classify J' and J' u {n}
    Num with_n = 2 * (sum + ln);
    if (which == MorseFunction::GOnV) {
      if (with_n < total) {
        int index = (d - 1) * popcount(gray);
        bump(index);
        ++inv.total;
        kept.push_back({index, gray | nbit});
      }
    } else {
      if (with_n > total) {
        Mask j = gray | nbit;
        int index = (d - 1) * (n - popcount(j));
        bump(index);
        ++inv.total;
        kept.push_back({index, j});
      }
      if (2 * sum > total) {
        int index = (d - 1) * (n - popcount(gray));
        bump(index);
        ++inv.total;
        kept.push_back({index, gray});
      }
    }
    if (step + 1 == count) break;
    int bit = std::countr_zero(step + 1);
    Mask flip = Mask(1) << bit;
    gray ^= flip;
    if (gray & flip)
      sum += scaled[static_cast<std::size_t>(bit)];
    else
      sum -= scaled[static_cast<std::size_t>(bit)];
  }
  for (std::size_t i = 0; i < by_index.size(); ++i)
    if (by_index[i] != 0) inv.counts_by_index.emplace_back(static_cast<int>(i), by_index[i]);
  inv.points_complete = kept.size() <= max_points;
  if (inv.points_complete) {
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto& [index, mask] : kept)
      inv.points.push_back({mask, index, sign_pattern(mask, n)});
  }
}

}  // namespace

MorseInventory morse_inventory(const LengthVector& l, int d, MorseFunction which,
                               std::size_t max_points) {
  if (d < 2) throw std::invalid_argument("Morse data needs d >= 2");
  require_supported_n(l.n());
  require_generic(l, "morse_inventory");
  MorseInventory inv;
  inv.function = which;
  inv.n = l.n();
  inv.d = d;
  if (l.fits64())
    collect_morse<std::int64_t>(l.scaled64(), l.scaled_total64(), l.n(), d, which, max_points, inv);
  else
    collect_morse<Int>(l.scaled(), l.scaled_total(), l.n(), d, which, max_points, inv);
  return inv;
}

int intersection_pairing(int n, Mask j, Mask k) {
  if (n < 3 || n > 30) throw std::invalid_argument("intersection pairing: n out of range");
  Mask limit = full_mask(n);
  if ((j & ~limit) || (k & ~limit))
    throw std::invalid_argument("intersection pairing: masks outside {1..n}");
  Mask nbit = Mask(1) << (n - 1);
  if (!(j & nbit) || !(k & nbit))
    throw std::invalid_argument("intersection pairing: both sets must contain n");
  if (popcount(j) + popcount(k) != n + 1)
    throw std::invalid_argument("intersection pairing: |J| + |K| must be n + 1");
  return (j & k) == nbit ? 1 : 0;
}

namespace {

// Size-t subsets of {1..m} in ascending mask order (Gosper's hack).
std::vector<Mask> size_t_subsets(int m, int t) {
  std::vector<Mask> out;
  if (t < 0 || t > m) return out;
  if (t == 0) {
    out.push_back(0);
    return out;
  }
  Mask v = (Mask(1) << t) - 1;
  Mask limit = full_mask(m);
  while (v <= limit) {
    out.push_back(v);
    Mask t0 = v | (v - 1);
    if (t0 + 1 > limit) break;
    v = (t0 + 1) | (((~t0 & (t0 + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> pairing_matrix(int n, int k) {
  if (n < 3 || n > 30) throw std::invalid_argument("pairing matrix: n out of range");
  if (k < 0 || k > n - 1) throw std::invalid_argument("pairing matrix: k out of range");
  Mask nbit = Mask(1) << (n - 1);
  std::vector<Mask> rows = size_t_subsets(n - 1, n - k - 1);
  std::vector<Mask> cols = size_t_subsets(n - 1, k);
  std::vector<std::vector<int>> matrix(rows.size(), std::vector<int>(cols.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      matrix[r][c] = intersection_pairing(n, rows[r] | nbit, cols[c] | nbit);
  return matrix;
}

}  // namespace chains

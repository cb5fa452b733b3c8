#include "chains/length_vector.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>

namespace chains {

namespace {

std::atomic<int> g_max_n{24};

constexpr std::int64_t kInt64SumLimit = std::int64_t(1) << 60;

}  // namespace

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

std::string mask_to_string(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : mask_elements(m)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

int max_supported_n() { return g_max_n.load(); }

void set_max_supported_n(int n) { g_max_n.store(std::clamp(n, 3, 30)); }

void require_supported_n(int n) {
  if (n > g_max_n.load())
    throw std::invalid_argument(
        "n = " + std::to_string(n) + " exceeds the subset-enumeration cap " +
        std::to_string(g_max_n.load()) + "; raise it with --max-n / CHAINS_MAX_N");
}

LengthVector::LengthVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 3)
    throw std::invalid_argument("length vector needs at least 3 entries");
  if (entries_.size() > 30)
    throw std::invalid_argument("length vector limited to 30 entries");
  total_ = 0;
  Int common_den = 1;
  for (const auto& e : entries_) {
    if (e <= 0) throw std::invalid_argument("length vector entries must be positive");
    total_ += e;
    common_den = boost::multiprecision::lcm(common_den, denominator_of(e));
  }
  scaled_.reserve(entries_.size());
  scaled_total_ = 0;
  for (const auto& e : entries_) {
    Int s = numerator_of(e) * (common_den / denominator_of(e));
    scaled_total_ += s;
    scaled_.push_back(std::move(s));
  }
  if (scaled_total_ <= kInt64SumLimit) {
    fits64_ = true;
    scaled64_.reserve(scaled_.size());
    for (const auto& s : scaled_) scaled64_.push_back(static_cast<std::int64_t>(s));
    scaled_total64_ = static_cast<std::int64_t>(scaled_total_);
  }
}

LengthVector LengthVector::parse(const std::string& text) {
  std::vector<Rational> entries;
  std::string trimmed = text;
  auto first = trimmed.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty length vector");
  if (trimmed[first] == '[') {
    auto doc = nlohmann::json::parse(trimmed, nullptr, true);
    if (!doc.is_array()) throw std::invalid_argument("length vector JSON must be an array");
    for (const auto& item : doc) {
      if (item.is_string())
        entries.push_back(parse_rational(item.get<std::string>()));
      else if (item.is_number_integer())
        entries.push_back(Rational(Int(item.get<long long>())));
      else if (item.is_number())
        entries.push_back(parse_rational(item.dump()));
      else
        throw std::invalid_argument("length vector JSON entries must be strings or numbers");
    }
  } else {
    std::stringstream ss(trimmed);
    std::string field;
    while (std::getline(ss, field, ',')) entries.push_back(parse_rational(field));
  }
  return LengthVector(std::move(entries));
}

const Rational& LengthVector::at(int i) const {
  if (i < 1 || i > n()) throw std::invalid_argument("length index out of range");
  return entries_[static_cast<std::size_t>(i - 1)];
}

std::string LengthVector::to_string() const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (i) out += ',';
    out += to_fraction_string(entries_[static_cast<std::size_t>(i)]);
  }
  return out;
}

SubsetClass classify_subset(const LengthVector& l, Mask subset) {
  if (subset & ~full_mask(l.n()))
    throw std::invalid_argument("subset mask has elements outside {1..n}");
  if (l.fits64()) {
    std::int64_t sum = 0;
    Mask m = subset;
    while (m) {
      int i = std::countr_zero(m);
      sum += l.scaled64()[static_cast<std::size_t>(i)];
      m &= m - 1;
    }
    std::int64_t twice = 2 * sum;
    if (twice < l.scaled_total64()) return SubsetClass::Short;
    if (twice > l.scaled_total64()) return SubsetClass::Long;
    return SubsetClass::Degenerate;
  }
  Int sum = 0;
  Mask m = subset;
  while (m) {
    int i = std::countr_zero(m);
    sum += l.scaled()[static_cast<std::size_t>(i)];
    m &= m - 1;
  }
  Int twice = 2 * sum;
  if (twice < l.scaled_total()) return SubsetClass::Short;
  if (twice > l.scaled_total()) return SubsetClass::Long;
  return SubsetClass::Degenerate;
}

namespace {

// Walks all subsets of {1..n-1} in Gray-code order, keeping a running sum,
// and reports masks whose doubled sum equals the total. Each balanced pair
// has exactly one side avoiding n, so this sees every degeneracy once.
template <typename Num>
void scan_balanced(const std::vector<Num>& scaled, const Num& total, int n,
                   const std::function<bool(Mask)>& visit) {
  const std::uint64_t count = std::uint64_t(1) << (n - 1);
  Num sum = 0;
  Mask gray = 0;
  if (2 * sum == total && !visit(gray)) return;  // empty set, only when total == 0
  for (std::uint64_t i = 1; i < count; ++i) {
    int bit = std::countr_zero(i);
    Mask flip = Mask(1) << bit;
    gray ^= flip;
    if (gray & flip)
      sum += scaled[static_cast<std::size_t>(bit)];
    else
      sum -= scaled[static_cast<std::size_t>(bit)];
    if (2 * sum == total && !visit(gray)) return;
  }
}

}  // namespace

bool is_generic(const LengthVector& l) {
  require_supported_n(l.n());
  bool found = false;
  auto stop = [&](Mask) {
    found = true;
    return false;
  };
  if (l.fits64())
    scan_balanced<std::int64_t>(l.scaled64(), l.scaled_total64(), l.n(), stop);
  else
    scan_balanced<Int>(l.scaled(), l.scaled_total(), l.n(), stop);
  return !found;
}

std::vector<Mask> degenerate_subsets(const LengthVector& l, std::size_t limit) {
  require_supported_n(l.n());
  std::vector<Mask> out;
  auto collect = [&](Mask m) {
    out.push_back(m);
    return true;
  };
  if (l.fits64())
    scan_balanced<std::int64_t>(l.scaled64(), l.scaled_total64(), l.n(), collect);
  else
    scan_balanced<Int>(l.scaled(), l.scaled_total(), l.n(), collect);
  std::sort(out.begin(), out.end());
  if (out.size() > limit) out.resize(limit);
  return out;
}

bool is_dominated(const LengthVector& l) {
  const auto& e = l.entries();
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e.back() < e[i]) return false;
  return true;
}

LengthVector normalize(const LengthVector& l) {
  std::vector<Rational> entries = l.entries();
  std::sort(entries.begin(), entries.end() - 1);
  return LengthVector(std::move(entries));
}

std::vector<int> normalize_permutation(const LengthVector& l) {
  int m = l.n() - 1;
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  const auto& e = l.entries();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return e[static_cast<std::size_t>(a)] < e[static_cast<std::size_t>(b)]; });
  std::vector<int> perm(static_cast<std::size_t>(l.n()));
  for (int pos = 0; pos < m; ++pos) perm[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos + 1;
  perm[static_cast<std::size_t>(l.n() - 1)] = l.n();
  return perm;
}

int dimension(int n, int d) {
  if (n < 3) throw std::invalid_argument("dimension requires n >= 3");
  if (d < 2) throw std::invalid_argument("dimension requires d >= 2");
  return (n - 2) * (d - 1) - 1;
}

}  // namespace chains

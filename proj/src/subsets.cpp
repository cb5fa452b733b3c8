#include "chains/subsets.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace chains {

bool shift_below(Mask k, Mask j) {
  if (popcount(k) > popcount(j)) return false;
  auto kd = descending_elements(k);
  auto jd = descending_elements(j);
  for (std::size_t i = 0; i < kd.size(); ++i)
    if (kd[i] > jd[i]) return false;
  return true;
}

std::vector<int> descending_elements(Mask m) {
  auto v = mask_elements(m);
  std::reverse(v.begin(), v.end());
  return v;
}

bool gene_render_less(Mask a, Mask b) {
  auto da = descending_elements(a);
  auto db = descending_elements(b);
  return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
}

bool code_less(const ChamberCode& a, const ChamberCode& b) {
  if (a.n != b.n) return a.n < b.n;
  return std::lexicographical_compare(a.genes.begin(), a.genes.end(), b.genes.begin(),
                                      b.genes.end(), gene_render_less);
}

namespace {

void require_generic(const LengthVector& l, const char* op) {
  if (!is_generic(l))
    throw std::invalid_argument(std::string(op) +
                                " requires a generic length vector (some subset balances its complement)");
}

// Visits every subset of {1..m} (as a mask) with its scaled sum, Gray-code
// order, including the empty set.
template <typename Num, typename Fn>
void walk_subset_sums(const std::vector<Num>& scaled, int m, Fn&& visit) {
  const std::uint64_t count = std::uint64_t(1) << m;
  Num sum = 0;
  Mask gray = 0;
  visit(gray, sum);
  for (std::uint64_t i = 1; i < count; ++i) {
    int bit = std::countr_zero(i);
    Mask flip = Mask(1) << bit;
    gray ^= flip;
    if (gray & flip)
      sum += scaled[static_cast<std::size_t>(bit)];
    else
      sum -= scaled[static_cast<std::size_t>(bit)];
    visit(gray, sum);
  }
}

// Bit-per-mask membership table for faces of the short-set complex.
class FaceTable {
 public:
  explicit FaceTable(int m) : bits_((std::size_t(1) << m) / 64 + 1, 0) {}
  void set(Mask m) { bits_[m >> 6] |= std::uint64_t(1) << (m & 63); }
  bool test(Mask m) const { return (bits_[m >> 6] >> (m & 63)) & 1u; }

 private:
  std::vector<std::uint64_t> bits_;
};

template <typename Num>
FaceTable build_face_table(const std::vector<Num>& scaled, const Num& total, int n,
                           bool& n_short, std::uint64_t& face_count) {
  // J u {n} short  <=>  2*sum(J) < total - 2*l_n, for J inside {1..n-1}.
  Num threshold = total - 2 * scaled[static_cast<std::size_t>(n - 1)];
  FaceTable table(n - 1);
  n_short = threshold > 0;
  face_count = 0;
  if (!n_short) return table;  // nothing containing n is short beyond nothing at all
  walk_subset_sums<Num>(scaled, n - 1, [&](Mask m, const Num& sum) {
    if (m != 0 && 2 * sum < threshold) {
      table.set(m);
      ++face_count;
    }
  });
  return table;
}

struct ShData {
  bool n_short = false;
  std::uint64_t face_count = 0;
  FaceTable table;
};

ShData compute_sh(const LengthVector& l) {
  ShData out{false, 0, FaceTable(l.n() - 1)};
  if (l.fits64())
    out.table = build_face_table<std::int64_t>(l.scaled64(), l.scaled_total64(), l.n(),
                                               out.n_short, out.face_count);
  else
    out.table = build_face_table<Int>(l.scaled(), l.scaled_total(), l.n(), out.n_short,
                                      out.face_count);
  return out;
}

}  // namespace

std::vector<Mask> short_family(const LengthVector& l) {
  require_supported_n(l.n());
  require_generic(l, "short_family");
  std::vector<Mask> out;
  out.reserve(std::size_t(1) << (l.n() - 1));
  if (l.fits64()) {
    const std::int64_t total = l.scaled_total64();
    walk_subset_sums<std::int64_t>(l.scaled64(), l.n(), [&](Mask m, const std::int64_t& sum) {
      if (2 * sum < total) out.push_back(m);
    });
  } else {
    const Int total = l.scaled_total();
    walk_subset_sums<Int>(l.scaled(), l.n(), [&](Mask m, const Int& sum) {
      if (2 * sum < total) out.push_back(m);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> sh_faces(const LengthVector& l) {
  require_supported_n(l.n());
  require_generic(l, "sh_faces");
  std::vector<Mask> out;
  auto sh = compute_sh(l);
  if (sh.face_count == 0) return out;
  out.reserve(sh.face_count);
  const Mask limit = full_mask(l.n() - 1);
  for (Mask m = 1; m <= limit; ++m)
    if (sh.table.test(m)) out.push_back(m);
  return out;
}

ChamberCode genetic_code(const LengthVector& l) {
  require_supported_n(l.n());
  require_generic(l, "genetic_code");
  LengthVector norm = normalize(l);
  auto sh = compute_sh(norm);
  ChamberCode code;
  code.n = l.n();
  code.n_short = sh.n_short;
  if (!sh.n_short) return code;
  if (sh.face_count == 0) {
    code.genes.push_back(0);
    return code;
  }
  const int m = l.n() - 1;
  const Mask limit = full_mask(m);
  for (Mask f = 1; f <= limit; ++f) {
    if (!sh.table.test(f)) continue;
    bool maximal = true;
    for (int v = 1; v <= m && maximal; ++v) {
      Mask vbit = Mask(1) << (v - 1);
      if (f & vbit) continue;
      if (sh.table.test(f | vbit)) maximal = false;       // grow
      if (v >= 2 && (f & (vbit >> 1)) && sh.table.test((f ^ (vbit >> 1)) | vbit))
        maximal = false;                                  // slide v-1 up to v
    }
    if (maximal) code.genes.push_back(f);
  }
  std::sort(code.genes.begin(), code.genes.end(), gene_render_less);
  return code;
}

std::vector<long long> a_vector(const LengthVector& l) {
  require_supported_n(l.n());
  require_generic(l, "a_vector");
  std::vector<long long> counts(static_cast<std::size_t>(l.n() - 1), 0);
  auto sh = compute_sh(l);
  if (!sh.n_short) return counts;
  counts[0] = 1;
  const Mask limit = full_mask(l.n() - 1);
  for (Mask m = 1; m <= limit; ++m)
    if (sh.table.test(m)) ++counts[static_cast<std::size_t>(popcount(m))];
  return counts;
}

std::vector<Mask> code_down_closure(const ChamberCode& code) {
  std::vector<Mask> out;
  if (code.genes.empty()) return out;
  const int m = code.n - 1;
  std::vector<bool> seen(std::size_t(1) << m, false);
  std::vector<Mask> stack;
  for (Mask g : code.genes)
    if (g != 0 && !seen[g]) {
      seen[g] = true;
      stack.push_back(g);
    }
  while (!stack.empty()) {
    Mask f = stack.back();
    stack.pop_back();
    out.push_back(f);
    for (int v = 1; v <= m; ++v) {
      Mask vbit = Mask(1) << (v - 1);
      if (!(f & vbit)) continue;
      Mask dropped = f ^ vbit;
      if (dropped != 0 && !seen[dropped]) {
        seen[dropped] = true;
        stack.push_back(dropped);
      }
      if (v >= 2 && !(f & (vbit >> 1))) {
        Mask slid = dropped | (vbit >> 1);
        if (!seen[slid]) {
          seen[slid] = true;
          stack.push_back(slid);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string render_gene(Mask gene, int n) {
  std::ostringstream os;
  std::vector<int> elems = descending_elements(gene);
  elems.insert(elems.begin(), n);
  const bool dotted = n >= 10;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i && dotted) os << '.';
    os << elems[i];
  }
  return os.str();
}

}  // namespace

std::string render_code(const ChamberCode& code) {
  std::string out = "<";
  for (std::size_t i = 0; i < code.genes.size(); ++i) {
    if (i) out += ',';
    out += render_gene(code.genes[i], code.n);
  }
  out += '>';
  return out;
}

ChamberCode parse_code(const std::string& text, int n) {
  if (n < 3 || n > 30) throw std::invalid_argument("code parse: n out of range");
  std::string body;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
  if (body.size() >= 2 && body.front() == '<' && body.back() == '>')
    body = body.substr(1, body.size() - 2);
  ChamberCode code;
  code.n = n;
  if (body.empty()) return code;
  code.n_short = true;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::vector<int> elems;
    if (n >= 10) {
      std::stringstream gs(item);
      std::string digit;
      while (std::getline(gs, digit, '.')) elems.push_back(std::stoi(digit));
    } else {
      for (char c : item) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("bad gene: " + item);
        elems.push_back(c - '0');
      }
    }
    if (elems.empty() || elems.front() != n)
      throw std::invalid_argument("gene must start with n: " + item);
    Mask gene = 0;
    int prev = n + 1;
    for (std::size_t i = 1; i < elems.size(); ++i) {
      int e = elems[i];
      if (e < 1 || e >= n || e >= prev)
        throw std::invalid_argument("gene elements must be distinct, descending, below n: " + item);
      prev = e;
      gene |= Mask(1) << (e - 1);
    }
    code.genes.push_back(gene);
  }
  std::sort(code.genes.begin(), code.genes.end(), gene_render_less);
  code.genes.erase(std::unique(code.genes.begin(), code.genes.end()), code.genes.end());
  if (code.genes.size() > 1)
    for (Mask g : code.genes)
      if (g == 0) throw std::invalid_argument("the bare gene n cannot appear with other genes");
  for (std::size_t i = 0; i < code.genes.size(); ++i)
    for (std::size_t j = 0; j < code.genes.size(); ++j)
      if (i != j && shift_below(code.genes[i], code.genes[j]))
        throw std::invalid_argument("genes must be incomparable in the shift order");
  return code;
}

}  // namespace chains

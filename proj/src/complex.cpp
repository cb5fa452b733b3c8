#include "chains/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chains {

namespace {

std::string render_sequence(const std::vector<long long>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Mask>& faces) {
  SimplicialComplex out;
  std::vector<Mask> sorted;
  sorted.reserve(faces.size());
  for (Mask f : faces)
    if (f != 0) sorted.push_back(f);
  std::sort(sorted.begin(), sorted.end(),
            [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b; });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Mask f : sorted) {
    bool covered = false;
    for (Mask kept : out.facets_)
      if ((f & kept) == f) {
        covered = true;
        break;
      }
    if (!covered) {
      out.facets_.push_back(f);
      out.vertices_ |= f;
    }
  }
  std::sort(out.facets_.begin(), out.facets_.end());
  return out;
}

int SimplicialComplex::max_label() const {
  return vertices_ == 0 ? 0 : 32 - std::countl_zero(vertices_);
}

bool SimplicialComplex::is_face(Mask f) const {
  if (f == 0) return false;
  for (Mask facet : facets_)
    if ((f & facet) == f) return true;
  return false;
}

std::vector<Mask> SimplicialComplex::all_faces() const {
  if (facets_.empty()) return {};
  std::vector<bool> seen(std::size_t(1) << max_label(), false);
  std::vector<Mask> out;
  for (Mask facet : facets_) {
    for (Mask s = facet;; s = (s - 1) & facet) {
      if (s != 0 && !seen[s]) {
        seen[s] = true;
        out.push_back(s);
      }
      if (s == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> counts;
  for (Mask f : all_faces()) {
    std::size_t k = static_cast<std::size_t>(popcount(f));
    if (counts.size() < k) counts.resize(k, 0);
    ++counts[k - 1];
  }
  return counts;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

Dsu components_dsu(const SimplicialComplex& c) {
  Dsu dsu(c.max_label() + 1);
  for (Mask facet : c.facets()) {
    auto elems = mask_elements(facet);
    for (std::size_t i = 1; i < elems.size(); ++i) dsu.unite(elems[0], elems[i]);
  }
  return dsu;
}

}  // namespace

int connected_components(const SimplicialComplex& c) {
  if (c.empty()) return 0;
  Dsu dsu = components_dsu(c);
  int count = 0;
  for (int v : mask_elements(c.vertex_mask()))
    if (dsu.find(v) == v) ++count;
  return count;
}

std::vector<long long> component_sizes(const SimplicialComplex& c) {
  if (c.empty()) return {};
  Dsu dsu = components_dsu(c);
  std::map<int, long long> sizes;
  for (int v : mask_elements(c.vertex_mask())) ++sizes[dsu.find(v)];
  std::vector<long long> out;
  for (auto& [root, size] : sizes) out.push_back(size);
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

std::vector<Mask> skeleton_edges(const SimplicialComplex& c) {
  std::vector<Mask> edges;
  for (Mask facet : c.facets()) {
    auto elems = mask_elements(facet);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        edges.push_back(mask_of({elems[i], elems[j]}));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

std::vector<long long> degree_sequence(const SimplicialComplex& c) {
  std::map<int, long long> deg;
  for (int v : mask_elements(c.vertex_mask())) deg[v] = 0;
  for (Mask e : skeleton_edges(c))
    for (int v : mask_elements(e)) ++deg[v];
  std::vector<long long> out;
  for (auto& [v, d] : deg) out.push_back(d);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string IsoCertificate::describe() const {
  if (isomorphic) return "isomorphic";
  if (invariant == "exhausted-search")
    return "not isomorphic: backtracking search exhausted all candidate bijections";
  return "not isomorphic: " + invariant + " " + left_value + " != " + right_value;
}

bool verify_bijection(const SimplicialComplex& a, const SimplicialComplex& b,
                      const std::vector<std::pair<int, int>>& bijection) {
  int top = 0;
  for (auto [from, to] : bijection) top = std::max({top, from, to});
  std::vector<int> image(static_cast<std::size_t>(top) + 1, 0);
  for (auto [from, to] : bijection) image[static_cast<std::size_t>(from)] = to;
  std::vector<Mask> mapped;
  for (Mask facet : a.facets()) {
    Mask out = 0;
    for (int v : mask_elements(facet)) {
      if (v > top || image[static_cast<std::size_t>(v)] == 0) return false;
      out |= Mask(1) << (image[static_cast<std::size_t>(v)] - 1);
    }
    mapped.push_back(out);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == b.facets();
}

namespace {

// Shared color refinement over the disjoint union of one or two complexes.
// Colors start from (degree, facet-size multiset) and are refined by sorted
// neighbor-color multisets until the partition stabilizes. Color ids are
// assigned by sorting the underlying keys, so they are label-free and stable.
struct VertexData {
  std::vector<int> labels;                // original labels per index
  std::vector<std::vector<int>> adj;      // neighbor indices
  std::vector<std::vector<long long>> init_key;
  std::vector<int> color;
};

void append_complex(const SimplicialComplex& c, VertexData& data) {
  std::map<int, std::size_t> index;
  for (int v : mask_elements(c.vertex_mask())) {
    index[v] = data.labels.size();
    data.labels.push_back(v);
    data.adj.emplace_back();
    data.init_key.emplace_back();
  }
  for (Mask e : skeleton_edges(c)) {
    auto elems = mask_elements(e);
    std::size_t i = index[elems[0]], j = index[elems[1]];
    data.adj[i].push_back(static_cast<int>(j));
    data.adj[j].push_back(static_cast<int>(i));
  }
  std::map<int, std::vector<long long>> facet_sizes;
  for (Mask facet : c.facets())
    for (int v : mask_elements(facet)) facet_sizes[v].push_back(popcount(facet));
  for (auto& [v, sizes] : facet_sizes) {
    std::sort(sizes.begin(), sizes.end());
    auto& key = data.init_key[index[v]];
    key.push_back(static_cast<long long>(data.adj[index[v]].size()));
    key.insert(key.end(), sizes.begin(), sizes.end());
  }
}

void refine_colors(VertexData& data) {
  std::size_t n = data.labels.size();
  std::vector<std::vector<long long>> keys = data.init_key;
  data.color.assign(n, 0);
  int classes = 0;
  for (int round = 0; round < static_cast<int>(n) + 1; ++round) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<int> color(n, 0);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++next;
      color[order[i]] = next;
    }
    int new_classes = n == 0 ? 0 : next + 1;
    data.color = color;
    if (new_classes == classes) break;
    classes = new_classes;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long long> key{color[i]};
      std::vector<long long> nb;
      for (int j : data.adj[i]) nb.push_back(color[static_cast<std::size_t>(j)]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keys[i] = std::move(key);
    }
  }
}

// Transposition test: does swapping labels u,w fix the facet set?
bool swap_is_automorphism(const std::vector<Mask>& facets, int u, int w) {
  Mask ub = Mask(1) << (u - 1), wb = Mask(1) << (w - 1);
  for (Mask f : facets) {
    bool has_u = f & ub, has_w = f & wb;
    if (has_u == has_w) continue;
    Mask swapped = f ^ ub ^ wb;
    if (!std::binary_search(facets.begin(), facets.end(), swapped)) return false;
  }
  return true;
}

struct CanonSearch {
  const std::vector<Mask>* facets = nullptr;     // ascending
  std::vector<int> vertices;                     // labels in class order
  std::vector<int> class_of;                     // parallel to vertices
  int v = 0;
  std::vector<int> new_label;                    // per label, 0 = unassigned
  std::vector<int> pos_vertex;                   // old label at each position
  std::vector<Mask> best;
  bool have_best = false;

  std::vector<Mask> partial_encoding(int depth) const {
    std::vector<Mask> enc;
    for (Mask f : *facets) {
      Mask out = 0;
      bool complete = true;
      for (int lv : mask_elements(f)) {
        int nl = new_label[static_cast<std::size_t>(lv)];
        if (nl == 0) {
          complete = false;
          break;
        }
        out |= Mask(1) << (nl - 1);
      }
      if (complete) enc.push_back(out);
    }
    (void)depth;
    std::sort(enc.begin(), enc.end());
    return enc;
  }

  // Compares the partial encoding against the prefix of best (entries below
  // 2^depth). Returns -1 when the branch can only produce something larger
  // (prune), 0 when tied so far, +1 when already strictly smaller.
  int compare_partial(int depth) const {
    if (!have_best) return 1;
    auto part = partial_encoding(depth);
    Mask limit = depth >= 32 ? ~Mask(0) : (Mask(1) << depth);
    std::size_t blen = 0;
    while (blen < best.size() && best[blen] < limit) ++blen;
    std::size_t k = std::min(part.size(), blen);
    for (std::size_t i = 0; i < k; ++i) {
      if (part[i] < best[i]) return 1;
      if (part[i] > best[i]) return -1;
    }
    if (part.size() < blen) return -1;  // missing facet means a later, larger entry
    if (part.size() > blen) return 1;
    return 0;
  }

  void dfs(int depth) {
    if (depth == v) {
      auto enc = partial_encoding(depth);
      if (!have_best || enc < best) {
        best = std::move(enc);
        have_best = true;
      }
      return;
    }
    int cls = class_of[static_cast<std::size_t>(depth)];
    std::vector<int> tried;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (class_of[i] != cls) continue;
      int u = vertices[i];
      if (new_label[static_cast<std::size_t>(u)] != 0) continue;
      bool skip = false;
      for (int w : tried)
        if (swap_is_automorphism(*facets, u, w)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(u);
      new_label[static_cast<std::size_t>(u)] = depth + 1;
      pos_vertex[static_cast<std::size_t>(depth)] = u;
      if (compare_partial(depth + 1) >= 0) dfs(depth + 1);
      new_label[static_cast<std::size_t>(u)] = 0;
    }
  }
};

}  // namespace

std::vector<Mask> canonical_form(const SimplicialComplex& c) {
  if (c.empty()) return {};
  VertexData data;
  append_complex(c, data);
  refine_colors(data);

  CanonSearch search;
  search.facets = &c.facets();
  std::size_t count = data.labels.size();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (data.color[a] != data.color[b]) return data.color[a] < data.color[b];
    return data.labels[a] < data.labels[b];
  });
  for (std::size_t i : order) {
    search.vertices.push_back(data.labels[i]);
    search.class_of.push_back(data.color[i]);
  }
  search.v = static_cast<int>(count);
  search.new_label.assign(static_cast<std::size_t>(c.max_label()) + 1, 0);
  search.pos_vertex.assign(count, 0);
  search.dfs(0);
  return search.best;
}

IsoCertificate are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  IsoCertificate cert;
  if (a.vertex_count() != b.vertex_count()) {
    cert.invariant = "vertex count";
    cert.left_value = std::to_string(a.vertex_count());
    cert.right_value = std::to_string(b.vertex_count());
    return cert;
  }
  if (a.f_vector() != b.f_vector()) {
    cert.invariant = "f-vector";
    cert.left_value = render_sequence(a.f_vector());
    cert.right_value = render_sequence(b.f_vector());
    return cert;
  }
  if (connected_components(a) != connected_components(b)) {
    cert.invariant = "component count";
    cert.left_value = std::to_string(connected_components(a));
    cert.right_value = std::to_string(connected_components(b));
    return cert;
  }
  if (component_sizes(a) != component_sizes(b)) {
    cert.invariant = "component sizes";
    cert.left_value = render_sequence(component_sizes(a));
    cert.right_value = render_sequence(component_sizes(b));
    return cert;
  }
  if (degree_sequence(a) != degree_sequence(b)) {
    cert.invariant = "degree sequence";
    cert.left_value = render_sequence(degree_sequence(a));
    cert.right_value = render_sequence(degree_sequence(b));
    return cert;
  }
  if (a.empty() && b.empty()) {
    cert.isomorphic = true;
    return cert;
  }

  VertexData data;
  append_complex(a, data);
  std::size_t a_count = data.labels.size();
  append_complex(b, data);
  refine_colors(data);

  std::vector<std::size_t> a_index(a_count);
  std::iota(a_index.begin(), a_index.end(), std::size_t(0));
  std::map<int, long long> class_size;
  for (std::size_t i = 0; i < data.labels.size(); ++i) ++class_size[data.color[i]];
  std::sort(a_index.begin(), a_index.end(), [&](std::size_t x, std::size_t y) {
    long long sx = class_size[data.color[x]], sy = class_size[data.color[y]];
    if (sx != sy) return sx < sy;
    if (data.color[x] != data.color[y]) return data.color[x] < data.color[y];
    return data.labels[x] < data.labels[y];
  });

  std::vector<Mask> a_adj(static_cast<std::size_t>(a.max_label()) + 1, 0);
  for (Mask e : skeleton_edges(a)) {
    auto el = mask_elements(e);
    a_adj[static_cast<std::size_t>(el[0])] |= Mask(1) << (el[1] - 1);
    a_adj[static_cast<std::size_t>(el[1])] |= Mask(1) << (el[0] - 1);
  }
  std::vector<Mask> b_adj(static_cast<std::size_t>(b.max_label()) + 1, 0);
  for (Mask e : skeleton_edges(b)) {
    auto el = mask_elements(e);
    b_adj[static_cast<std::size_t>(el[0])] |= Mask(1) << (el[1] - 1);
    b_adj[static_cast<std::size_t>(el[1])] |= Mask(1) << (el[0] - 1);
  }

  std::vector<int> image(static_cast<std::size_t>(a.max_label()) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(b.max_label()) + 1, false);
  std::vector<std::pair<int, int>> assigned;

  std::function<bool(std::size_t)> try_assign = [&](std::size_t step) -> bool {
    if (step == a_count) {
      std::vector<std::pair<int, int>> bij = assigned;
      std::sort(bij.begin(), bij.end());
      if (verify_bijection(a, b, bij)) {
        cert.isomorphic = true;
        cert.bijection = bij;
        return true;
      }
      return false;
    }
    std::size_t ai = a_index[step];
    int av = data.labels[ai];
    for (std::size_t bi = a_count; bi < data.labels.size(); ++bi) {
      if (data.color[bi] != data.color[ai]) continue;
      int bv = data.labels[bi];
      if (used[static_cast<std::size_t>(bv)]) continue;
      bool consistent = true;
      for (auto [pa, pb] : assigned) {
        bool adj_a = mask_contains(a_adj[static_cast<std::size_t>(av)], pa);
        bool adj_b = mask_contains(b_adj[static_cast<std::size_t>(bv)], pb);
        if (adj_a != adj_b) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      assigned.emplace_back(av, bv);
      used[static_cast<std::size_t>(bv)] = true;
      if (try_assign(step + 1)) return true;
      used[static_cast<std::size_t>(bv)] = false;
      assigned.pop_back();
    }
    return false;
  };

  if (!try_assign(0)) {
    cert.invariant = "exhausted-search";
    cert.left_value = "no face-preserving bijection";
    cert.right_value = "";
  }
  return cert;
}

}  // namespace chains

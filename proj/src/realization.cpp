#include "chains/realization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chains {

namespace {

std::vector<Mask> minimal_nonfaces(const SimplicialComplex& target, int m) {
  // K is a minimal non-face iff K is not a face but every K minus one
  // element is (with the empty set counting as a face). Every such K is
  // some face plus one extra element, so the frontier search below is
  // exhaustive. Excluded vertices appear as their singletons.
  std::vector<Mask> faces = target.all_faces();
  std::vector<bool> is_face_bit(std::size_t(1) << m, false);
  is_face_bit[0] = true;
  for (Mask f : faces) is_face_bit[f] = true;
  std::vector<Mask> candidates;
  std::vector<Mask> from = faces;
  from.push_back(0);
  for (Mask f : from) {
    for (int v = 1; v <= m; ++v) {
      Mask vbit = Mask(1) << (v - 1);
      if (f & vbit) continue;
      Mask k = f | vbit;
      if (is_face_bit[k]) continue;
      bool minimal = true;
      for (int u = 1; u <= m && minimal; ++u) {
        Mask ubit = Mask(1) << (u - 1);
        if ((k & ubit) && !is_face_bit[k ^ ubit]) minimal = false;
      }
      if (minimal) candidates.push_back(k);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

// Variables: l_1..l_n, then the split margin delta = x[n] - x[n+1].
std::vector<LinearConstraint> base_constraints(int n, bool require_dominated,
                                               bool require_ascending) {
  std::vector<LinearConstraint> rows;
  const int dp = n, dm = n + 1;
  {
    LinearConstraint total;
    total.coeffs.assign(static_cast<std::size_t>(n), Rational(1));
    total.rel = Rel::Eq;
    total.rhs = 1;
    rows.push_back(std::move(total));
  }
  for (int i = 0; i < n; ++i) {
    LinearConstraint pos;  // l_i >= delta
    pos.coeffs.assign(static_cast<std::size_t>(dm) + 1, Rational(0));
    pos.coeffs[static_cast<std::size_t>(i)] = 1;
    pos.coeffs[static_cast<std::size_t>(dp)] = -1;
    pos.coeffs[static_cast<std::size_t>(dm)] = 1;
    pos.rel = Rel::Ge;
    pos.rhs = 0;
    rows.push_back(std::move(pos));
  }
  if (require_dominated)
    for (int i = 0; i + 1 < n; ++i) {
      LinearConstraint dom;  // l_n >= l_i (ties allowed)
      dom.coeffs.assign(static_cast<std::size_t>(n), Rational(0));
      dom.coeffs[static_cast<std::size_t>(n - 1)] = 1;
      dom.coeffs[static_cast<std::size_t>(i)] = -1;
      dom.rel = Rel::Ge;
      dom.rhs = 0;
      rows.push_back(std::move(dom));
    }
  if (require_ascending)
    for (int i = 0; i + 2 < n; ++i) {
      LinearConstraint asc;  // l_{i+1} >= l_i among the first n-1
      asc.coeffs.assign(static_cast<std::size_t>(n), Rational(0));
      asc.coeffs[static_cast<std::size_t>(i + 1)] = 1;
      asc.coeffs[static_cast<std::size_t>(i)] = -1;
      asc.rel = Rel::Ge;
      asc.rhs = 0;
      rows.push_back(std::move(asc));
    }
  return rows;
}

LinearConstraint short_with_n(int n, Mask j) {
  // 1 - 2*(sum_J + l_n) >= delta
  LinearConstraint row;
  row.coeffs.assign(static_cast<std::size_t>(n) + 2, Rational(0));
  for (int v : mask_elements(j)) row.coeffs[static_cast<std::size_t>(v - 1)] = 2;
  row.coeffs[static_cast<std::size_t>(n - 1)] = 2;
  row.coeffs[static_cast<std::size_t>(n)] = 1;
  row.coeffs[static_cast<std::size_t>(n + 1)] = -1;
  row.rel = Rel::Le;
  row.rhs = 1;
  return row;
}

LinearConstraint long_with_n(int n, Mask k) {
  // 2*(sum_K + l_n) - 1 >= delta
  LinearConstraint row;
  row.coeffs.assign(static_cast<std::size_t>(n) + 2, Rational(0));
  for (int v : mask_elements(k)) row.coeffs[static_cast<std::size_t>(v - 1)] = 2;
  row.coeffs[static_cast<std::size_t>(n - 1)] = 2;
  row.coeffs[static_cast<std::size_t>(n)] = -1;
  row.coeffs[static_cast<std::size_t>(n + 1)] = 1;
  row.rel = Rel::Ge;
  row.rhs = 1;
  return row;
}

SimplexResult solve_margin(int n, std::vector<LinearConstraint> rows) {
  std::vector<Rational> objective(static_cast<std::size_t>(n) + 2, Rational(0));
  objective[static_cast<std::size_t>(n)] = 1;
  objective[static_cast<std::size_t>(n) + 1] = -1;
  return simplex_maximize(objective, rows, n + 2);
}

}  // namespace

RealizationResult realize(const RealizationProblem& p) {
  if (p.n < 3 || p.n > 30) throw std::invalid_argument("realize: n out of range");
  const int m = p.n - 1;
  if (p.target.max_label() > m)
    throw std::invalid_argument("realize: target has vertices outside {1..n-1}");
  if (!p.n_short && !p.target.empty())
    throw std::invalid_argument("realize: a chamber with {n} long cannot have short sets beyond it");

  auto rows = base_constraints(p.n, p.require_dominated, p.require_ascending);
  if (p.n_short) {
    rows.push_back(short_with_n(p.n, 0));
    for (Mask facet : p.target.facets()) rows.push_back(short_with_n(p.n, facet));
    for (Mask k : minimal_nonfaces(p.target, m)) rows.push_back(long_with_n(p.n, k));
  } else {
    rows.push_back(long_with_n(p.n, 0));
  }

  RealizationResult result;
  auto lp = solve_margin(p.n, std::move(rows));
  if (lp.status != SimplexResult::Status::Optimal || lp.objective <= 0) return result;

  std::vector<Rational> entries(lp.solution.begin(), lp.solution.begin() + p.n);
  LengthVector witness{std::move(entries)};

  // Round-trip verification: the witness must reproduce the problem exactly.
  if (!is_generic(witness)) throw std::logic_error("realize: witness is not generic");
  bool witness_n_short = classify_subset(witness, Mask(1) << (p.n - 1)) == SubsetClass::Short;
  if (witness_n_short != p.n_short)
    throw std::logic_error("realize: witness disagrees on whether {n} is short");
  if (sh_faces(witness) != p.target.all_faces())
    throw std::logic_error("realize: witness face family differs from the target");
  if (p.require_dominated && !is_dominated(witness))
    throw std::logic_error("realize: witness is not dominated");
  if (p.require_ascending) {
    for (int i = 0; i + 2 < p.n; ++i)
      if (witness.entries()[static_cast<std::size_t>(i)] > witness.entries()[static_cast<std::size_t>(i + 1)])
        throw std::logic_error("realize: witness is not ascending");
  }

  result.feasible = true;
  result.witness = std::move(witness);
  result.slack = lp.objective;
  return result;
}

namespace {

bool partial_feasible(int n, const std::vector<Mask>& genes, bool dominated_only) {
  auto rows = base_constraints(n, dominated_only, true);
  rows.push_back(short_with_n(n, 0));
  for (Mask g : genes) rows.push_back(short_with_n(n, g));
  auto lp = solve_margin(n, std::move(rows));
  return lp.status == SimplexResult::Status::Optimal && lp.objective > 0;
}

struct ChamberSearch {
  int n = 0;
  bool dominated_only = false;
  std::vector<Mask> universe;  // nonempty subsets of {1..n-1} in a linear
                               // extension of the shift order
  std::map<std::vector<Mask>, std::vector<Mask>> seen;  // canonical form -> faces
  std::vector<ChamberCode> found;

  void record(const std::vector<Mask>& genes) {
    ChamberCode code;
    code.n = n;
    code.n_short = true;
    if (genes.empty())
      code.genes.push_back(0);
    else {
      code.genes = genes;
      std::sort(code.genes.begin(), code.genes.end(), gene_render_less);
    }
    std::vector<Mask> faces = code_down_closure(code);
    auto complex = SimplicialComplex::from_faces(faces);
    auto key = canonical_form(complex);
    auto it = seen.find(key);
    if (it != seen.end()) {
      if (it->second != faces)
        throw std::logic_error(
            "two distinct shifted face families share a canonical form; chamber "
            "deduplication is unsound for this n");
      return;  // literal revisit cannot happen in the antichain walk, but stay safe
    }
    seen.emplace(std::move(key), std::move(faces));

    RealizationProblem problem;
    problem.n = n;
    problem.n_short = true;
    problem.target = complex;
    problem.require_dominated = dominated_only;
    problem.require_ascending = true;
    auto result = realize(problem);
    if (!result.feasible) return;
    if (genetic_code(*result.witness) != code)
      throw std::logic_error("realized witness has a different genetic code than requested");
    found.push_back(std::move(code));
  }

  void dfs(std::vector<Mask>& chosen, std::size_t start) {
    for (std::size_t pos = start; pos < universe.size(); ++pos) {
      Mask candidate = universe[pos];
      bool antichain = true;
      for (Mask g : chosen)
        if (shift_below(g, candidate)) {  // the reverse is impossible this far in
          antichain = false;
          break;
        }
      if (!antichain) continue;
      chosen.push_back(candidate);
      if (partial_feasible(n, chosen, dominated_only)) {
        record(chosen);
        dfs(chosen, pos + 1);
      }
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<ChamberCode> enumerate_chambers(int n, bool dominated_only) {
  if (n < 4 || n > 7)
    throw std::invalid_argument("enumerate_chambers supports 4 <= n <= 7");
  require_supported_n(n);

  ChamberSearch search;
  search.n = n;
  search.dominated_only = dominated_only;
  const Mask limit = full_mask(n - 1);
  for (Mask m = 1; m <= limit; ++m) search.universe.push_back(m);
  std::sort(search.universe.begin(), search.universe.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return mask_elements(a) < mask_elements(b);
  });

  std::vector<ChamberCode> out;
  {
    RealizationProblem empty_chamber;
    empty_chamber.n = n;
    empty_chamber.n_short = false;
    empty_chamber.require_dominated = dominated_only;
    if (realize(empty_chamber).feasible) out.push_back(ChamberCode{n, false, {}});
  }
  search.record({});  // the sphere chamber <n>
  std::vector<Mask> chosen;
  search.dfs(chosen, 0);

  out.insert(out.end(), search.found.begin(), search.found.end());
  std::sort(out.begin(), out.end(), code_less);
  return out;
}

IsoCertificate chamber_isomorphic(bool n_short1, const SimplicialComplex& c1,
                                  bool n_short2, const SimplicialComplex& c2) {
  if (n_short1 != n_short2) {
    IsoCertificate cert;
    cert.invariant = "a_0";
    cert.left_value = n_short1 ? "1" : "0";
    cert.right_value = n_short2 ? "1" : "0";
    return cert;
  }
  return are_isomorphic(c1, c2);
}

EquivalenceReport equivalent(const LengthVector& l1, const LengthVector& l2, int d) {
  if (d < 3) throw std::invalid_argument("equivalence needs d >= 3");
  if (!is_generic(l1) || !is_generic(l2))
    throw std::invalid_argument("equivalence is defined for generic vectors only");

  EquivalenceReport report;
  report.dominated1 = is_dominated(l1);
  report.dominated2 = is_dominated(l2);

  auto c1 = SimplicialComplex::from_faces(sh_faces(l1));
  auto c2 = SimplicialComplex::from_faces(sh_faces(l2));
  bool s1 = classify_subset(l1, Mask(1) << (l1.n() - 1)) == SubsetClass::Short;
  bool s2 = classify_subset(l2, Mask(1) << (l2.n() - 1)) == SubsetClass::Short;
  report.certificate = chamber_isomorphic(s1, c1, s2, c2);

  report.betti1 = betti_numbers(l1, d);
  report.betti2 = betti_numbers(l2, d);
  report.betti_comparable = report.betti1.dominated_valid && report.betti2.dominated_valid;
  report.betti_equal = report.betti_comparable && report.betti1.dim == report.betti2.dim &&
                       report.betti1.ranks == report.betti2.ranks;

  if (report.dominated1 && report.dominated2)
    report.verdict = report.certificate.isomorphic ? "diffeomorphic" : "not diffeomorphic";
  else
    report.verdict = "undecided-by-this-theory";
  return report;
}

}  // namespace chains

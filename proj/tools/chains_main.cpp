#include "chains/cohomology.hpp"
#include "chains/complex.hpp"
#include "chains/length_vector.hpp"
#include "chains/lp.hpp"
#include "chains/realization.hpp"
#include "chains/report.hpp"
#include "chains/subsets.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chains {
namespace {

void emit(const Json& doc, const std::string& format, std::string (*text_fn)(const Json&)) {
  if (format == "text")
    std::cout << text_fn(doc);
  else
    std::cout << to_json_text(doc);
}

std::vector<int> effective_ds(std::vector<int> ds) {
  if (ds.empty()) ds.push_back(3);
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  for (int d : ds)
    if (d < 3 || d > 4096)
      throw std::invalid_argument("--d must be between 3 and 4096");
  return ds;
}

std::vector<Mask> parse_facets(const std::string& text) {
  Json parsed;
  try {
    parsed = Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("--facets is not valid JSON: ") + e.what());
  }
  if (!parsed.is_array())
    throw std::invalid_argument("--facets must be a JSON array of vertex lists");
  std::vector<Mask> faces;
  for (const auto& face : parsed) {
    if (!face.is_array())
      throw std::invalid_argument("--facets entries must be arrays of vertex labels");
    Mask m = 0;
    for (const auto& v : face) {
      if (!v.is_number_integer())
        throw std::invalid_argument("--facets vertex labels must be integers");
      long long label = v.get<long long>();
      if (label < 1 || label > 29)
        throw std::invalid_argument("--facets vertex labels must lie in 1..29");
      m |= Mask(1) << (label - 1);
    }
    if (m == 0) throw std::invalid_argument("--facets entries must be nonempty");
    faces.push_back(m);
  }
  return faces;
}

int run_analyze(const std::string& lengths, std::vector<int> ds, const std::string& format,
                bool dot) {
  LengthVector l = LengthVector::parse(lengths);
  if (!is_generic(l)) {
    emit(degenerate_document(l), format, analyze_text);
    return 2;
  }
  if (dot) {
    auto complex = SimplicialComplex::from_faces(sh_faces(normalize(l)));
    std::cout << dot_skeleton(complex, "sh");
    return 0;
  }
  emit(analyze_document(l, effective_ds(std::move(ds))), format, analyze_text);
  return 0;
}

int run_compare(const std::string& first, const std::string& second, std::vector<int> ds,
                const std::string& format) {
  LengthVector l1 = LengthVector::parse(first);
  LengthVector l2 = LengthVector::parse(second);
  for (const auto* l : {&l1, &l2}) {
    if (!is_generic(*l)) {
      emit(degenerate_document(*l, "compare"), format, analyze_text);
      return 2;
    }
  }
  emit(compare_document(l1, l2, effective_ds(std::move(ds))), format, compare_text);
  return 0;
}

int run_realize(int n, const std::string& facets_text, const std::string& code_text,
                bool dominated_only, const std::string& format) {
  RealizationProblem problem;
  problem.n = n;
  problem.require_dominated = dominated_only;
  ChamberCode code;
  bool have_code = false;
  if (!code_text.empty()) {
    code = parse_code(code_text, n);
    have_code = true;
    problem.n_short = code.n_short;
    problem.target = SimplicialComplex::from_faces(code_down_closure(code));
    // An ascending witness recomputes to exactly the requested code.
    problem.require_ascending = true;
  } else {
    problem.target = SimplicialComplex::from_faces(parse_facets(facets_text));
  }
  RealizationResult result = realize(problem);
  emit(realize_document(problem, result, have_code ? &code : nullptr), format, realize_text);
  return result.feasible ? 0 : 1;
}

int run_enumerate(int n, bool dominated_only, const std::string& format) {
  auto codes = enumerate_chambers(n, dominated_only);
  emit(enumerate_document(n, dominated_only, codes), format, enumerate_text);
  return 0;
}

LengthVector random_dominated(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> dist(1, 40);
  for (;;) {
    std::vector<Rational> entries;
    int top = 1;
    for (int i = 0; i + 1 < n; ++i) {
      int v = dist(rng);
      top = std::max(top, v);
      entries.emplace_back(v);
    }
    entries.emplace_back(top);
    LengthVector l(std::move(entries));
    if (is_generic(l)) return l;
  }
}

std::vector<std::pair<std::string, bool>> run_checks() {
  std::vector<std::pair<std::string, bool>> checks;
  auto guarded = [&](const std::string& name, auto&& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (...) {
      ok = false;
    }
    checks.emplace_back(name, ok);
  };

  guarded("rational parsing round-trips", [] {
    return to_fraction_string(parse_rational("0.25")) == "1/4" &&
           to_fraction_string(parse_rational("7")) == "7" &&
           to_fraction_string(parse_rational("-3/9")) == "-1/3";
  });

  guarded("genetic codes of the worked pair", [] {
    LengthVector a = LengthVector::parse("1,1,1,2,3,3");
    LengthVector b = LengthVector::parse("1/4,1,1,1,2,2");
    return render_code(genetic_code(a)) == "<632,64>" &&
           render_code(genetic_code(b)) == "<641>";
  });

  guarded("short-set faces of the worked example", [] {
    LengthVector l = LengthVector::parse("1,1,1,2,3,3");
    std::vector<Mask> expected{mask_of({1}), mask_of({2}),    mask_of({1, 2}), mask_of({3}),
                               mask_of({1, 3}), mask_of({2, 3}), mask_of({4})};
    std::sort(expected.begin(), expected.end());
    return sh_faces(l) == expected;
  });

  guarded("Betti table of the worked example", [] {
    LengthVector l = LengthVector::parse("1,1,1,2,3,3");
    BettiTable t = betti_numbers(l, 3);
    std::vector<long long> expected{1, 0, 4, 3, 3, 4, 0, 1};
    return t.ranks == expected && euler_characteristic(t) == 0;
  });

  guarded("rank symmetry on random dominated vectors", [] {
    std::mt19937 rng(20240817u);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 4 + trial % 5;
      int d = trial % 2 ? 4 : 3;
      LengthVector l = random_dominated(rng, n);
      BettiTable t = betti_numbers(l, d);
      long long total = 0;
      for (std::size_t k = 0; k < t.ranks.size(); ++k) {
        if (t.ranks[k] != t.ranks[t.ranks.size() - 1 - k]) return false;
        total += t.ranks[k];
      }
      long long face_total = 0;
      for (long long a : a_vector(l)) face_total += a;
      if (total != 2 * face_total) return false;
    }
    return true;
  });

  guarded("Morse counts match the a-vector", [] {
    std::mt19937 rng(51u);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 4 + trial % 4;
      int d = 3 + trial % 3;
      LengthVector l = random_dominated(rng, n);
      auto a = a_vector(l);
      MorseInventory g = morse_inventory(l, d, MorseFunction::GOnV);
      long long expected_total = 0;
      for (long long c : a) expected_total += c;
      if (g.total != expected_total) return false;
      for (const auto& [index, count] : g.counts_by_index) {
        if (index % (d - 1) != 0) return false;
        if (count != a[static_cast<std::size_t>(index / (d - 1))]) return false;
      }
      MorseInventory f = morse_inventory(l, d, MorseFunction::FPrimeOnZPrime);
      if (f.total != (1LL << (n - 1))) return false;
    }
    return true;
  });

  guarded("pairing matrix is a permutation", [] {
    for (int k = 0; k <= 5; ++k) {
      auto m = pairing_matrix(6, k);
      for (const auto& row : m) {
        long long ones = 0;
        for (int v : row) ones += v;
        if (ones != 1) return false;
      }
      for (std::size_t c = 0; c < m.size(); ++c) {
        long long ones = 0;
        for (const auto& row : m) ones += row[c];
        if (ones != 1) return false;
      }
    }
    return true;
  });

  guarded("isomorphism spots relabelings and obstructions", [] {
    auto c1 = SimplicialComplex::from_faces(
        {mask_of({1, 2}), mask_of({1, 3}), mask_of({2, 3}), mask_of({4})});
    auto c2 = SimplicialComplex::from_faces({mask_of({1, 2}), mask_of({1, 3}), mask_of({1, 4})});
    auto c2_relabeled =
        SimplicialComplex::from_faces({mask_of({4, 3}), mask_of({4, 2}), mask_of({4, 1})});
    auto iso = are_isomorphic(c2, c2_relabeled);
    auto obstruction = are_isomorphic(c1, c2);
    return iso.isomorphic && !obstruction.isomorphic &&
           obstruction.invariant == "component count";
  });

  guarded("realization round-trips a code", [] {
    ChamberCode code = parse_code("<641>", 6);
    RealizationProblem p;
    p.n = 6;
    p.n_short = code.n_short;
    p.target = SimplicialComplex::from_faces(code_down_closure(code));
    p.require_ascending = true;
    RealizationResult r = realize(p);
    return r.feasible && genetic_code(*r.witness) == code;
  });

  guarded("chamber listing for n = 4", [] {
    std::vector<std::string> expected{"<>", "<4>", "<41>", "<42>", "<421>", "<43>"};
    auto codes = enumerate_chambers(4, false);
    if (codes.size() != expected.size()) return false;
    for (std::size_t i = 0; i < codes.size(); ++i)
      if (render_code(codes[i]) != expected[i]) return false;
    return true;
  });

  guarded("exact simplex solves a pinned instance", [] {
    std::vector<LinearConstraint> cs;
    cs.push_back({{Rational(1), Rational(1)}, Rel::Le, Rational(4)});
    cs.push_back({{Rational(0), Rational(1)}, Rel::Le, Rational(3)});
    auto r = simplex_maximize({Rational(1), Rational(2)}, cs, 2);
    if (r.status != SimplexResult::Status::Optimal || r.objective != Rational(7)) return false;
    std::vector<LinearConstraint> bad;
    bad.push_back({{Rational(1)}, Rel::Le, Rational(-1)});
    auto inf = simplex_maximize({Rational(1)}, bad, 1);
    return inf.status == SimplexResult::Status::Infeasible;
  });

  return checks;
}

int run_selftest(const std::string& format) {
  auto checks = run_checks();
  Json doc = selftest_document(checks);
  emit(doc, format, selftest_text);
  return doc.at("passed").get<bool>() ? 0 : 1;
}

}  // namespace
}  // namespace chains

int main(int argc, char** argv) {
  CLI::App app{"combinatorial invariants of chain and polygon spaces"};
  app.require_subcommand(1);

  int max_n = 0;
  auto* max_n_opt =
      app.add_option("--max-n", max_n, "subset enumeration cap, 3..30 (default 24)")
          ->envname("CHAINS_MAX_N");
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker hint; output does not depend on it");
  std::string format = "json";
  app.add_option("--format", format, "json (default) or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string a_lengths;
  std::vector<int> ds;
  bool dot = false;
  auto* analyze = app.add_subcommand("analyze", "invariants of one length vector");
  analyze->fallthrough();
  analyze->add_option("lengths", a_lengths, "comma separated rationals or a JSON array")
      ->required();
  analyze->add_option("--d", ds, "ambient dimensions, repeatable (default 3)")->delimiter(',');
  analyze->add_flag("--dot", dot, "print the short-set complex 1-skeleton as DOT and exit");

  std::string c_first, c_second;
  auto* compare = app.add_subcommand("compare", "decide diffeomorphism of two chain spaces");
  compare->fallthrough();
  compare->add_option("first", c_first, "first length vector")->required();
  compare->add_option("second", c_second, "second length vector")->required();
  compare->add_option("--d", ds, "ambient dimensions, repeatable (default 3)")->delimiter(',');

  int r_n = 0;
  std::string r_facets, r_code;
  bool r_dom = false;
  auto* realize_cmd = app.add_subcommand("realize", "find a length vector with a given short-set complex");
  realize_cmd->fallthrough();
  realize_cmd->add_option("--n", r_n, "number of segments plus one")->required();
  auto* facets_opt =
      realize_cmd->add_option("--facets", r_facets, "target facets as a JSON array of vertex lists");
  auto* code_opt = realize_cmd->add_option("--code", r_code, "target genetic code, e.g. <641>");
  facets_opt->excludes(code_opt);
  realize_cmd->add_flag("--dominated-only", r_dom, "require a dominated witness");

  int e_n = 0;
  bool e_dom = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list all chambers for a given n");
  enumerate_cmd->fallthrough();
  enumerate_cmd->add_option("--n", e_n, "number of entries, 4..7")->required();
  enumerate_cmd->add_flag("--dominated-only", e_dom, "only chambers with a dominated representative");

  auto* selftest = app.add_subcommand("selftest", "run the built-in cross-checks");
  selftest->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (max_n_opt->count() > 0) chains::set_max_supported_n(max_n);
    (void)jobs;
    if (*analyze) return chains::run_analyze(a_lengths, ds, format, dot);
    if (*compare) return chains::run_compare(c_first, c_second, ds, format);
    if (*realize_cmd) {
      if (facets_opt->count() == 0 && code_opt->count() == 0)
        throw std::invalid_argument("realize needs --facets or --code");
      return chains::run_realize(r_n, r_facets, r_code, r_dom, format);
    }
    if (*enumerate_cmd) return chains::run_enumerate(e_n, e_dom, format);
    if (*selftest) return chains::run_selftest(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

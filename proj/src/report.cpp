#include "chains/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace chains {

namespace {

Json lengths_json(const LengthVector& l) {
  Json arr = Json::array();
  for (const auto& e : l.entries()) arr.push_back(to_fraction_string(e));
  return arr;
}

Json masks_json(const std::vector<Mask>& masks) {
  Json arr = Json::array();
  for (Mask m : masks) arr.push_back(mask_elements(m));
  return arr;
}

Json code_json(const ChamberCode& code) {
  Json genes = Json::array();
  for (Mask g : code.genes) {
    std::vector<int> digits{code.n};
    for (int e : descending_elements(g)) digits.push_back(e);
    genes.push_back(digits);
  }
  Json doc;
  doc["text"] = render_code(code);
  doc["n_short"] = code.n_short;
  doc["genes"] = std::move(genes);
  return doc;
}

Json complex_json(const SimplicialComplex& c) {
  Json doc;
  doc["vertices"] = c.vertex_count();
  doc["facets"] = masks_json(c.facets());
  doc["f_vector"] = c.f_vector();
  doc["connected_components"] = connected_components(c);
  doc["component_sizes"] = component_sizes(c);
  return doc;
}

Json betti_json(const BettiTable& t) {
  Json doc;
  doc["d"] = t.d;
  doc["dim"] = t.dim;
  doc["ranks"] = t.ranks;
  doc["euler_characteristic"] = euler_characteristic(t);
  return doc;
}

constexpr std::size_t kMaxListedProducts = 64;   // basis size bound for product dumps
constexpr long long kMaxListedPoints = 128;      // critical-point dump bound

Json ring_json(const GradedRing& ring) {
  Json doc;
  doc["grade_unit"] = ring.grade_unit();
  doc["is_zero"] = ring.is_zero();
  doc["graded_dims"] = ring.graded_dims();
  doc["basis_size"] = ring.basis().size();
  doc["nonzero_products"] = ring.nonzero_product_count();
  if (ring.basis().size() <= kMaxListedProducts) {
    Json products = Json::array();
    for (const auto& [a, b, ab] : ring.product_triples()) {
      Json triple = Json::array();
      triple.push_back(mask_elements(a));
      triple.push_back(mask_elements(b));
      triple.push_back(mask_elements(ab));
      products.push_back(std::move(triple));
    }
    doc["products"] = std::move(products);
  }
  return doc;
}

Json morse_json(const MorseInventory& inv) {
  Json doc;
  doc["function"] = inv.function == MorseFunction::GOnV ? "g_on_V" : "f_prime_on_Z_prime";
  doc["total"] = inv.total;
  Json counts = Json::array();
  for (const auto& [index, count] : inv.counts_by_index) {
    counts.push_back(Json::array({index, count}));
  }
  doc["counts_by_index"] = std::move(counts);
  if (inv.points_complete && inv.total <= kMaxListedPoints) {
    Json points = Json::array();
    for (const auto& p : inv.points) {
      Json point;
      point["set"] = mask_elements(p.set);
      point["index"] = p.index;
      point["signs"] = p.signs;
      points.push_back(std::move(point));
    }
    doc["points"] = std::move(points);
  }
  return doc;
}

Json certificate_json(const IsoCertificate& cert) {
  Json doc;
  doc["isomorphic"] = cert.isomorphic;
  doc["description"] = cert.describe();
  if (cert.isomorphic) {
    Json pairs = Json::array();
    for (const auto& [v, w] : cert.bijection) pairs.push_back(Json::array({v, w}));
    doc["bijection"] = std::move(pairs);
  } else {
    doc["invariant"] = cert.invariant;
    doc["left"] = cert.left_value;
    doc["right"] = cert.right_value;
  }
  return doc;
}

Json side_json(const LengthVector& l) {
  Json doc;
  doc["lengths"] = lengths_json(l);
  doc["n"] = l.n();
  doc["dominated"] = is_dominated(l);
  doc["genetic_code"] = code_json(genetic_code(l));
  return doc;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string comma_list(const Json& arr) {
  std::vector<std::string> parts;
  for (const auto& v : arr) {
    if (v.is_string())
      parts.push_back(v.get<std::string>());
    else
      parts.push_back(v.dump());
  }
  return join(parts, ", ");
}

std::string tuple_list(const Json& arr) { return "(" + comma_list(arr) + ")"; }

std::string set_list(const Json& elements) {
  std::vector<std::string> parts;
  for (const auto& v : elements) parts.push_back(v.dump());
  return "{" + join(parts, ",") + "}";
}

std::string face_list(const Json& faces) {
  if (faces.empty()) return "(none)";
  std::vector<std::string> parts;
  for (const auto& f : faces) parts.push_back(set_list(f));
  return join(parts, " ");
}

// "<632,64>" -> the same code with angle brackets for terminal output.
std::string pretty_code(const Json& code_obj) {
  std::string text = code_obj.at("text").get<std::string>();
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>')
    text = text.substr(1, text.size() - 2);
  return "⟨" + text + "⟩";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json analyze_document(const LengthVector& l, const std::vector<int>& ds) {
  LengthVector norm = normalize(l);
  Json doc;
  doc["command"] = "analyze";
  doc["input"] = Json{{"lengths", lengths_json(l)}, {"n", l.n()}};
  doc["generic"] = true;
  bool dominated = is_dominated(norm);
  doc["dominated"] = dominated;
  doc["normalized"] =
      Json{{"lengths", lengths_json(norm)}, {"permutation", normalize_permutation(l)}};
  doc["genetic_code"] = code_json(genetic_code(norm));
  doc["a_vector"] = a_vector(norm);
  auto complex = SimplicialComplex::from_faces(sh_faces(norm));
  doc["sh_complex"] = complex_json(complex);

  Json warnings = Json::array();
  if (dominated) {
    Json betti = Json::array();
    Json ring = Json::array();
    for (int d : ds) {
      betti.push_back(betti_json(betti_numbers(norm, d)));
      Json r = ring_json(ring_presentation(norm, d));
      Json entry;
      entry["d"] = d;
      for (auto& [key, value] : r.items()) entry[key] = std::move(value);
      ring.push_back(std::move(entry));
    }
    doc["betti"] = std::move(betti);
    doc["ring"] = std::move(ring);
  } else {
    warnings.push_back(
        "the last entry is not a maximum; the closed-form Betti ranks and the ring "
        "presentation require a dominated vector, so those sections are withheld");
  }

  Json morse = Json::array();
  for (int d : ds) {
    for (auto which : {MorseFunction::GOnV, MorseFunction::FPrimeOnZPrime}) {
      Json entry;
      entry["d"] = d;
      Json m = morse_json(morse_inventory(norm, d, which));
      for (auto& [key, value] : m.items()) entry[key] = std::move(value);
      morse.push_back(std::move(entry));
    }
  }
  doc["morse"] = std::move(morse);
  doc["warnings"] = std::move(warnings);
  return doc;
}

Json degenerate_document(const LengthVector& l, const std::string& command) {
  constexpr std::size_t kListed = 16;
  auto subsets = degenerate_subsets(l, kListed);
  Json doc;
  doc["command"] = command;
  doc["input"] = Json{{"lengths", lengths_json(l)}, {"n", l.n()}};
  doc["generic"] = false;
  std::string first = subsets.empty() ? std::string("?") : mask_to_string(subsets.front());
  doc["error"] = "degenerate length vector: subset " + first + " balances its complement";
  doc["degenerate_subsets"] = masks_json(subsets);
  doc["truncated"] = subsets.size() >= kListed;
  return doc;
}

Json compare_document(const LengthVector& l1, const LengthVector& l2,
                      const std::vector<int>& ds) {
  if (ds.empty()) throw std::invalid_argument("compare needs at least one d");
  EquivalenceReport rep = equivalent(l1, l2, ds.front());

  Json doc;
  doc["command"] = "compare";
  doc["first"] = side_json(l1);
  doc["second"] = side_json(l2);
  doc["verdict"] = rep.verdict;
  doc["certificate"] = certificate_json(rep.certificate);
  Json warnings = Json::array();

  if (rep.dominated1 && rep.dominated2) {
    doc["complex_isomorphic"] = rep.certificate.isomorphic;
    LengthVector n1 = normalize(l1);
    LengthVector n2 = normalize(l2);
    auto c1 = SimplicialComplex::from_faces(sh_faces(n1));
    auto c2 = SimplicialComplex::from_faces(sh_faces(n2));
    auto ring_cert = rings_isomorphic(ring_presentation(n1, ds.front()),
                                      ring_presentation(n2, ds.front()), c1, c2);
    doc["ring_isomorphic"] = ring_cert.isomorphic;

    Json betti = Json::array();
    bool all_equal = true;
    for (int d : ds) {
      BettiTable t1 = d == ds.front() ? rep.betti1 : betti_numbers(n1, d);
      BettiTable t2 = d == ds.front() ? rep.betti2 : betti_numbers(n2, d);
      bool equal = t1.ranks == t2.ranks;
      all_equal = all_equal && equal;
      Json entry;
      entry["d"] = d;
      entry["first_ranks"] = t1.ranks;
      entry["second_ranks"] = t2.ranks;
      entry["equal"] = equal;
      betti.push_back(std::move(entry));
    }
    doc["betti"] = std::move(betti);
    doc["betti_equal"] = all_equal;
  } else {
    warnings.push_back(
        "at least one vector is not dominated; the diffeomorphism classification and the "
        "Betti comparison require dominated vectors, so the verdict is undecided here");
  }
  doc["warnings"] = std::move(warnings);
  return doc;
}

Json realize_document(const RealizationProblem& problem, const RealizationResult& result,
                      const ChamberCode* requested_code) {
  Json doc;
  doc["command"] = "realize";
  doc["n"] = problem.n;
  Json target;
  if (requested_code) target["code"] = code_json(*requested_code);
  target["n_short"] = problem.n_short;
  target["facets"] = masks_json(problem.target.facets());
  doc["target"] = std::move(target);
  doc["require_dominated"] = problem.require_dominated;
  doc["feasible"] = result.feasible;
  if (result.feasible) {
    Json witness;
    witness["lengths"] = lengths_json(*result.witness);
    witness["slack"] = to_fraction_string(result.slack);
    witness["dominated"] = is_dominated(*result.witness);
    witness["genetic_code"] = code_json(genetic_code(*result.witness));
    doc["witness"] = std::move(witness);
  }
  return doc;
}

Json enumerate_document(int n, bool dominated_only, const std::vector<ChamberCode>& codes) {
  Json doc;
  doc["command"] = "enumerate";
  doc["n"] = n;
  doc["dominated_only"] = dominated_only;
  doc["count"] = codes.size();
  Json chambers = Json::array();
  for (const auto& code : codes) {
    Json entry;
    entry["code"] = code_json(code);
    auto faces = code_down_closure(code);
    std::vector<long long> a(static_cast<std::size_t>(n - 1), 0);
    a[0] = code.n_short ? 1 : 0;
    for (Mask f : faces) a[static_cast<std::size_t>(popcount(f))] += 1;
    entry["a_vector"] = a;
    auto complex = SimplicialComplex::from_faces(faces);
    entry["sh_complex"] = complex_json(complex);
    chambers.push_back(std::move(entry));
  }
  doc["chambers"] = std::move(chambers);
  return doc;
}

Json selftest_document(const std::vector<std::pair<std::string, bool>>& checks) {
  Json doc;
  doc["command"] = "selftest";
  Json list = Json::array();
  long long failures = 0;
  for (const auto& [name, passed] : checks) {
    list.push_back(Json{{"name", name}, {"passed", passed}});
    if (!passed) ++failures;
  }
  doc["checks"] = std::move(list);
  doc["total"] = checks.size();
  doc["failures"] = failures;
  doc["passed"] = failures == 0;
  return doc;
}

std::string to_json_text(const Json& doc) { return doc.dump(2) + "\n"; }

std::string analyze_text(const Json& doc) {
  std::ostringstream out;
  out << "lengths: " << comma_list(doc.at("input").at("lengths")) << "  (n = "
      << doc.at("input").at("n").get<int>() << ")\n";
  if (!doc.at("generic").get<bool>()) {
    out << "generic: no\n";
    out << "error: " << doc.at("error").get<std::string>() << "\n";
    out << "balanced subsets:";
    for (const auto& s : doc.at("degenerate_subsets")) out << " " << set_list(s);
    if (doc.at("truncated").get<bool>()) out << " ...";
    out << "\n";
    return out.str();
  }
  out << "generic: yes\n";
  out << "dominated: " << yes_no(doc.at("dominated").get<bool>()) << "\n";
  out << "normalized: " << comma_list(doc.at("normalized").at("lengths")) << "\n";
  out << "genetic code: " << pretty_code(doc.at("genetic_code")) << "\n";
  out << "a-vector: " << tuple_list(doc.at("a_vector")) << "\n";
  const Json& sh = doc.at("sh_complex");
  out << "short-set complex: " << sh.at("vertices").get<int>() << " vertices, "
      << sh.at("connected_components").get<int>() << " components, f-vector "
      << tuple_list(sh.at("f_vector")) << "\n";
  out << "  facets: " << face_list(sh.at("facets")) << "\n";
  if (doc.contains("betti")) {
    for (const auto& b : doc.at("betti")) {
      out << "d = " << b.at("d").get<int>() << ": dim " << b.at("dim").get<int>()
          << ", Betti " << tuple_list(b.at("ranks")) << ", Euler characteristic "
          << b.at("euler_characteristic").get<long long>() << "\n";
    }
  }
  if (doc.contains("ring")) {
    for (const auto& r : doc.at("ring")) {
      out << "ring d = " << r.at("d").get<int>() << ": graded dims "
          << tuple_list(r.at("graded_dims")) << ", basis " << r.at("basis_size").get<long long>()
          << ", nonzero products " << r.at("nonzero_products").get<long long>() << "\n";
    }
  }
  for (const auto& m : doc.at("morse")) {
    out << "Morse " << (m.at("function").get<std::string>() == "g_on_V" ? "g" : "f'")
        << " d = " << m.at("d").get<int>() << ": total " << m.at("total").get<long long>()
        << ", by index";
    for (const auto& pair : m.at("counts_by_index"))
      out << " " << pair.at(0).get<int>() << ":" << pair.at(1).get<long long>();
    out << "\n";
  }
  for (const auto& w : doc.at("warnings"))
    out << "warning: " << w.get<std::string>() << "\n";
  return out.str();
}

std::string compare_text(const Json& doc) {
  std::ostringstream out;
  out << "first:  " << comma_list(doc.at("first").at("lengths")) << "  code "
      << pretty_code(doc.at("first").at("genetic_code")) << "\n";
  out << "second: " << comma_list(doc.at("second").at("lengths")) << "  code "
      << pretty_code(doc.at("second").at("genetic_code")) << "\n";
  out << "verdict: " << doc.at("verdict").get<std::string>() << "\n";
  out << "certificate: " << doc.at("certificate").at("description").get<std::string>() << "\n";
  if (doc.contains("ring_isomorphic"))
    out << "ring isomorphic: " << yes_no(doc.at("ring_isomorphic").get<bool>()) << "\n";
  if (doc.contains("betti")) {
    for (const auto& b : doc.at("betti")) {
      out << "Betti d = " << b.at("d").get<int>() << ": "
          << (b.at("equal").get<bool>() ? "equal" : "different") << " (first "
          << tuple_list(b.at("first_ranks")) << ", second " << tuple_list(b.at("second_ranks"))
          << ")\n";
    }
    out << "Betti equal for all d: " << yes_no(doc.at("betti_equal").get<bool>()) << "\n";
  }
  for (const auto& w : doc.at("warnings"))
    out << "warning: " << w.get<std::string>() << "\n";
  return out.str();
}

std::string realize_text(const Json& doc) {
  std::ostringstream out;
  const Json& target = doc.at("target");
  out << "n = " << doc.at("n").get<int>() << ", target ";
  if (target.contains("code")) out << "code " << pretty_code(target.at("code")) << ", ";
  out << "facets: " << face_list(target.at("facets")) << "\n";
  out << "feasible: " << yes_no(doc.at("feasible").get<bool>()) << "\n";
  if (doc.at("feasible").get<bool>()) {
    const Json& w = doc.at("witness");
    out << "witness: " << comma_list(w.at("lengths")) << "  (slack "
        << w.at("slack").get<std::string>() << ")\n";
    out << "witness code: " << pretty_code(w.at("genetic_code")) << "\n";
  }
  return out.str();
}

std::string enumerate_text(const Json& doc) {
  std::ostringstream out;
  out << "n = " << doc.at("n").get<int>();
  if (doc.at("dominated_only").get<bool>()) out << " (dominated chambers only)";
  out << ": " << doc.at("count").get<long long>() << " chambers\n";
  for (const auto& entry : doc.at("chambers")) {
    out << pretty_code(entry.at("code")) << "  a = " << tuple_list(entry.at("a_vector")) << "\n";
  }
  return out.str();
}

std::string selftest_text(const Json& doc) {
  std::ostringstream out;
  for (const auto& check : doc.at("checks")) {
    out << (check.at("passed").get<bool>() ? "pass" : "FAIL") << "  "
        << check.at("name").get<std::string>() << "\n";
  }
  out << doc.at("total").get<long long>() << " checks, "
      << doc.at("failures").get<long long>() << " failures\n";
  return out.str();
}

std::string dot_skeleton(const SimplicialComplex& c, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v : mask_elements(c.vertex_mask())) out << "  " << v << ";\n";
  std::set<std::pair<int, int>> edges;
  for (Mask facet : c.facets()) {
    auto elems = mask_elements(facet);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        edges.insert({elems[i], elems[j]});
  }
  for (const auto& [a, b] : edges) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace chains

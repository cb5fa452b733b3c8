#pragma once

#include "chains/cohomology.hpp"
#include "chains/complex.hpp"
#include "chains/length_vector.hpp"
#include "chains/realization.hpp"
#include "chains/subsets.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace chains {

// Key order is fixed at construction; together with the "p/q" rational
// rendering this makes every document byte-stable across runs.
using Json = nlohmann::ordered_json;

// Full analysis of one generic length vector. Everything past the
// "normalized" key is computed on the normalized vector (first n-1 entries
// sorted ascending); "permutation" records where each input entry went.
// Non-dominated vectors get no betti/ring sections, only a warning.
Json analyze_document(const LengthVector& l, const std::vector<int>& ds);

// Error document for a vector with balanced subsets (exit code 2).
Json degenerate_document(const LengthVector& l, const std::string& command = "analyze");

Json compare_document(const LengthVector& l1, const LengthVector& l2,
                      const std::vector<int>& ds);

// `requested_code` is echoed into the document when the target came from a
// code rather than an explicit facet list.
Json realize_document(const RealizationProblem& problem, const RealizationResult& result,
                      const ChamberCode* requested_code = nullptr);

Json enumerate_document(int n, bool dominated_only, const std::vector<ChamberCode>& codes);

Json selftest_document(const std::vector<std::pair<std::string, bool>>& checks);

std::string to_json_text(const Json& doc);  // 2-space indent, trailing newline

// Plain-text renderings of the documents above (codes in the angle-bracket
// notation, one fact per line).
std::string analyze_text(const Json& doc);
std::string compare_text(const Json& doc);
std::string realize_text(const Json& doc);
std::string enumerate_text(const Json& doc);
std::string selftest_text(const Json& doc);

// 1-skeleton in DOT format: every vertex on its own line, then the edges,
// both ascending. Isolated vertices are kept.
std::string dot_skeleton(const SimplicialComplex& c, const std::string& name = "complex");

}  // namespace chains

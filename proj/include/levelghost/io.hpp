#pragma once

#include <string>

#include "json.hpp"

#include "levelghost/criterion.hpp"
#include "levelghost/graph.hpp"
#include "levelghost/search.hpp"
#include "levelghost/sieve.hpp"

namespace levelghost {

// Text graph format, one record per line, '#' starts a comment:
//   v <id> <genus>
//   e <id> <tail> <head>
// Parsing validates structure (with line diagnostics via GraphParseError),
// connectivity, and stability.
StableGraph parse_graph_text(const std::string& text);

// Structured form: {"vertices": [{"id", "genus"}], "edges": [{"id", "tail",
// "head"}]}, with the same validation.
StableGraph parse_graph_json(const nlohmann::json& doc);

// Accepts either of the two forms, sniffing for a leading '{'.
StableGraph parse_graph_auto(const std::string& document);

nlohmann::json graph_to_json(const StableGraph& graph);
std::string render_graph_text(const StableGraph& graph);

// Witness document: {level, graph, M: {edge-id -> value}, a: {...},
// age: {num, den}, support: [edge ids], codimension, checks: {...}}.
// M values are read on the serialized (tail, head) orientations, which the
// graph block spells out, so documents are unambiguous.
nlohmann::json witness_to_json(const GhostWitness& witness);

// Inverse of witness_to_json.  The returned witness is rebuilt through
// check_junior_ghost; a document whose claims cannot be reproduced is
// rejected with StructuralError.
GhostWitness witness_from_json(const nlohmann::json& doc);

std::string render_witness_text(const GhostWitness& witness);

nlohmann::json search_to_json(const StableGraph& graph, Level level, const SearchConfig& config,
                              const SearchResult& result);
std::string render_search_text(const StableGraph& graph, Level level, const SearchConfig& config,
                               const SearchResult& result);

nlohmann::json classification_to_json(const ClassificationResult& result,
                                      const ClassifyConfig& config);
std::string render_classification_text(const ClassificationResult& result,
                                       const ClassifyConfig& config);

nlohmann::json sieve_to_json(const SieveReport& report);
std::string render_sieve_text(const SieveReport& report);

} // namespace levelghost

#include "levelghost/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <set>
#include <sstream>

#include "levelghost/errors.hpp"

namespace levelghost {

namespace {

struct PendingVertex {
    Vertex vertex;
    int line;
};

struct PendingEdge {
    Edge edge;
    int line;
};

int parse_record_int(const std::string& token, int line, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw GraphParseError(ParseIssue::BadInteger, line,
                              "line " + std::to_string(line) + ": bad integer '" + token +
                                  "' for " + what);
    }
    return value;
}

// Shared validation and assembly for both document forms.  Performs the
// duplicate/endpoint/genus checks itself so that each failure carries its
// diagnostic code and source line, then delegates connectivity to the graph
// constructor and finishes with the stability predicate.
StableGraph finalize_graph(const std::vector<PendingVertex>& vertices,
                           const std::vector<PendingEdge>& edges) {
    if (vertices.empty()) {
        throw GraphParseError(ParseIssue::NoVertices, 0, "graph document declares no vertices");
    }

    std::set<int> vertex_ids;
    for (const PendingVertex& pv : vertices) {
        if (!vertex_ids.insert(pv.vertex.id).second) {
            throw GraphParseError(ParseIssue::DuplicateVertexId, pv.line,
                                  "line " + std::to_string(pv.line) + ": duplicate vertex id " +
                                      std::to_string(pv.vertex.id));
        }
        if (pv.vertex.genus < 0) {
            throw GraphParseError(ParseIssue::NegativeGenus, pv.line,
                                  "line " + std::to_string(pv.line) + ": vertex " +
                                      std::to_string(pv.vertex.id) + " has negative genus");
        }
    }
    std::set<int> edge_ids;
    for (const PendingEdge& pe : edges) {
        if (!edge_ids.insert(pe.edge.id).second) {
            throw GraphParseError(ParseIssue::DuplicateEdgeId, pe.line,
                                  "line " + std::to_string(pe.line) + ": duplicate edge id " +
                                      std::to_string(pe.edge.id));
        }
        for (int endpoint : {pe.edge.tail, pe.edge.head}) {
            if (!vertex_ids.contains(endpoint)) {
                throw GraphParseError(ParseIssue::UnknownEndpoint, pe.line,
                                      "line " + std::to_string(pe.line) + ": edge " +
                                          std::to_string(pe.edge.id) +
                                          " references unknown vertex " +
                                          std::to_string(endpoint));
            }
        }
    }

    std::vector<Vertex> vs;
    vs.reserve(vertices.size());
    for (const PendingVertex& pv : vertices) {
        vs.push_back(pv.vertex);
    }
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const PendingEdge& pe : edges) {
        es.push_back(pe.edge);
    }

    try {
        StableGraph graph(std::move(vs), std::move(es));
        if (!validate_stable(graph)) {
            throw GraphParseError(ParseIssue::NotStable, 0,
                                  "graph violates stability: some vertex has 2g - 2 + valence <= 0");
        }
        return graph;
    } catch (const GraphParseError&) {
        throw;
    } catch (const StructuralError& e) {
        // Everything else was pre-checked, so the constructor can only be
        // complaining about connectivity.
        throw GraphParseError(ParseIssue::NotConnected, 0, e.what());
    }
}

} // namespace

StableGraph parse_graph_text(const std::string& text) {
    std::vector<PendingVertex> vertices;
    std::vector<PendingEdge> edges;

    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string token;
        while (fields >> token) {
            tokens.push_back(token);
        }
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0] == "v" && tokens.size() == 3) {
            vertices.push_back({{parse_record_int(tokens[1], line_number, "vertex id"),
                                 parse_record_int(tokens[2], line_number, "genus")},
                                line_number});
        } else if (tokens[0] == "e" && tokens.size() == 4) {
            edges.push_back({{parse_record_int(tokens[1], line_number, "edge id"),
                              parse_record_int(tokens[2], line_number, "tail"),
                              parse_record_int(tokens[3], line_number, "head")},
                             line_number});
        } else {
            throw GraphParseError(ParseIssue::MalformedRecord, line_number,
                                  "line " + std::to_string(line_number) +
                                      ": expected 'v <id> <genus>' or 'e <id> <tail> <head>'");
        }
    }
    return finalize_graph(vertices, edges);
}

StableGraph parse_graph_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
        !doc["vertices"].is_array() || !doc["edges"].is_array()) {
        throw GraphParseError(ParseIssue::MalformedRecord, 0,
                              "graph document must be an object with 'vertices' and 'edges' arrays");
    }
    std::vector<PendingVertex> vertices;
    std::vector<PendingEdge> edges;
    try {
        for (const auto& v : doc["vertices"]) {
            vertices.push_back({{v.at("id").get<int>(), v.at("genus").get<int>()}, 0});
        }
        for (const auto& e : doc["edges"]) {
            edges.push_back(
                {{e.at("id").get<int>(), e.at("tail").get<int>(), e.at("head").get<int>()}, 0});
        }
    } catch (const nlohmann::json::exception& e) {
        throw GraphParseError(ParseIssue::MalformedRecord, 0,
                              std::string("graph document field error: ") + e.what());
    }
    return finalize_graph(vertices, edges);
}

StableGraph parse_graph_auto(const std::string& document) {
    for (char c : document) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            continue;
        }
        if (c == '{') {
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(document);
            } catch (const nlohmann::json::exception& e) {
                throw GraphParseError(ParseIssue::MalformedRecord, 0,
                                      std::string("graph document is not valid JSON: ") + e.what());
            }
            return parse_graph_json(doc);
        }
        break;
    }
    return parse_graph_text(document);
}

nlohmann::json graph_to_json(const StableGraph& graph) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const Vertex& v : graph.vertices()) {
        vertices.push_back({{"id", v.id}, {"genus", v.genus}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : graph.edges()) {
        edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    }
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string render_graph_text(const StableGraph& graph) {
    std::ostringstream out;
    for (const Vertex& v : graph.vertices()) {
        out << "v " << v.id << ' ' << v.genus << '\n';
    }
    for (const Edge& e : graph.edges()) {
        out << "e " << e.id << ' ' << e.tail << ' ' << e.head << '\n';
    }
    return out.str();
}

nlohmann::json witness_to_json(const GhostWitness& witness) {
    nlohmann::json m = nlohmann::json::object();
    nlohmann::json a = nlohmann::json::object();
    const auto& edges = witness.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string key = std::to_string(edges[i].id);
        m[key] = witness.multiplicity.values[i];
        a[key] = witness.twist.values[i];
    }
    return {{"level", witness.level.modulus()},
            {"graph", graph_to_json(witness.graph)},
            {"M", std::move(m)},
            {"a", std::move(a)},
            {"age", {{"num", witness.age.numerator}, {"den", witness.age.denominator}}},
            {"support", witness.support},
            {"codimension", witness.codimension},
            {"checks",
             {{"compatible", witness.checks.compatible},
              {"ker_boundary", witness.checks.ker_boundary},
              {"im_coboundary", witness.checks.im_coboundary},
              {"junior", witness.checks.junior}}}};
}

GhostWitness witness_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw StructuralError("witness document must be a JSON object");
    }
    try {
        const StableGraph graph = parse_graph_json(doc.at("graph"));
        const Level level(doc.at("level").get<std::int64_t>());

        const auto read_cochain = [&](const char* field) {
            const nlohmann::json& map = doc.at(field);
            if (!map.is_object()) {
                throw StructuralError(std::string("witness field '") + field +
                                      "' must map edge ids to values");
            }
            OneCochain out;
            out.values.reserve(graph.edges().size());
            std::size_t used = 0;
            for (const Edge& e : graph.edges()) {
                const std::string key = std::to_string(e.id);
                if (!map.contains(key)) {
                    throw StructuralError(std::string("witness field '") + field +
                                          "' is missing edge " + key);
                }
                out.values.push_back(canon(map.at(key).get<std::int64_t>(), level));
                ++used;
            }
            if (map.size() != used) {
                throw StructuralError(std::string("witness field '") + field +
                                      "' mentions unknown edges");
            }
            return out;
        };

        const OneCochain m = read_cochain("M");
        const OneCochain a = read_cochain("a");
        const std::vector<int> claimed_support =
            doc.at("support").get<std::vector<int>>();
        const SupportPolicy policy = claimed_support.size() == graph.edges().size()
                                         ? SupportPolicy::Full
                                         : SupportPolicy::Any;

        auto outcome = check_junior_ghost(graph, level, m, a, policy);
        auto* witness = std::get_if<GhostWitness>(&outcome);
        if (witness == nullptr) {
            throw StructuralError("witness document does not re-verify as a junior ghost");
        }

        const AgeValue claimed_age{doc.at("age").at("num").get<std::int64_t>(),
                                   doc.at("age").at("den").get<std::int64_t>()};
        if (claimed_age != witness->age || claimed_support != witness->support ||
            doc.at("codimension").get<int>() != witness->codimension) {
            throw StructuralError("witness document disagrees with its own re-verification");
        }
        const nlohmann::json& checks = doc.at("checks");
        const GhostChecks claimed{checks.at("compatible").get<bool>(),
                                  checks.at("ker_boundary").get<bool>(),
                                  checks.at("im_coboundary").get<bool>(),
                                  checks.at("junior").get<bool>()};
        if (!(claimed == witness->checks)) {
            throw StructuralError("witness document disagrees with its own re-verification");
        }
        return std::move(*witness);
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("witness document field error: ") + e.what());
    }
}

std::string render_witness_text(const GhostWitness& witness) {
    std::ostringstream out;
    out << "junior ghost witness\n";
    out << "  level        " << witness.level.modulus() << '\n';
    out << "  graph        " << witness.graph.vertices().size() << " vertices, "
        << witness.graph.edges().size() << " edges, b1 " << witness.graph.first_betti() << '\n';
    const OneCochain acted =
        odot_cochain(witness.graph, witness.level, witness.twist, witness.multiplicity);
    const auto& edges = witness.graph.edges();

    const auto pad_left = [](const std::string& s, std::size_t w) {
        return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
    };
    const auto pad_right = [](const std::string& s, std::size_t w) {
        return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
    };

    std::vector<std::array<std::string, 5>> rows;
    std::array<std::size_t, 5> widths{4, 11, 1, 1, 5}; // edge, orientation, M, a, a(.)M
    for (std::size_t i = 0; i < edges.size(); ++i) {
        rows.push_back({std::to_string(edges[i].id),
                        std::to_string(edges[i].tail) + " -> " + std::to_string(edges[i].head),
                        std::to_string(witness.multiplicity.values[i]),
                        std::to_string(witness.twist.values[i]),
                        std::to_string(acted.values[i])});
        for (std::size_t c = 0; c < widths.size(); ++c) {
            widths[c] = std::max(widths[c], rows.back()[c].size());
        }
    }
    out << "  " << pad_right("edge", widths[0]) << "  " << pad_right("orientation", widths[1])
        << "  " << pad_left("M", widths[2]) << "  " << pad_left("a", widths[3]) << "  "
        << pad_left("a(.)M", widths[4]) << '\n';
    for (const auto& row : rows) {
        out << "  " << pad_right(row[0], widths[0]) << "  " << pad_right(row[1], widths[1]) << "  "
            << pad_left(row[2], widths[2]) << "  " << pad_left(row[3], widths[3]) << "  "
            << pad_left(row[4], widths[4]) << '\n';
    }
    out << "  age          " << witness.age.numerator << '/' << witness.age.denominator
        << (is_junior(witness.age) ? " (junior)" : "") << '\n';
    out << "  support      {";
    for (std::size_t i = 0; i < witness.support.size(); ++i) {
        out << (i == 0 ? "" : ", ") << witness.support[i];
    }
    out << "}\n";
    out << "  codimension  " << witness.codimension << '\n';
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "  checks       compatible=" << yn(witness.checks.compatible)
        << " ker_boundary=" << yn(witness.checks.ker_boundary)
        << " im_coboundary=" << yn(witness.checks.im_coboundary)
        << " junior=" << yn(witness.checks.junior) << '\n';
    if (witness.support.size() == 1) {
        out << "  note         single-edge support: may act as a quasireflection; "
               "interpret with care\n";
    }
    return out.str();
}

namespace {

const char* policy_name(SupportPolicy policy) {
    return policy == SupportPolicy::Full ? "full" : "any";
}

} // namespace

nlohmann::json search_to_json(const StableGraph& graph, Level level, const SearchConfig& config,
                              const SearchResult& result) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const GhostWitness& w : result.witnesses) {
        witnesses.push_back(witness_to_json(w));
    }
    return {{"level", level.modulus()},
            {"graph", graph_to_json(graph)},
            {"support", policy_name(config.support_policy)},
            {"complete", result.complete},
            {"kernel_cochains", result.kernel_cochains},
            {"candidates", result.candidates},
            {"witness_count", result.witnesses.size()},
            {"witnesses", std::move(witnesses)}};
}

std::string render_search_text(const StableGraph& graph, Level level, const SearchConfig& config,
                               const SearchResult& result) {
    std::ostringstream out;
    out << "search: " << graph.vertices().size() << " vertices, " << graph.edges().size()
        << " edges, level " << level.modulus() << ", support " << policy_name(config.support_policy)
        << '\n';
    out << "kernel cochains: " << result.kernel_cochains << '\n';
    out << "twist candidates examined: " << result.candidates << '\n';
    out << "witnesses reported: " << result.witnesses.size() << '\n';
    if (result.witnesses.empty()) {
        if (result.complete) {
            out << "no junior ghost exists under this policy (enumeration complete)\n";
        }
    } else {
        if (!result.complete) {
            out << "stopped at the first witness; the enumeration was not exhausted\n";
        }
        for (const GhostWitness& w : result.witnesses) {
            out << render_witness_text(w);
        }
    }
    return out.str();
}

namespace {

const char* family_name(GraphFamily family) {
    return family == GraphFamily::Banana ? "banana" : "all-stable";
}

} // namespace

nlohmann::json classification_to_json(const ClassificationResult& result,
                                      const ClassifyConfig& config) {
    nlohmann::json per_edge = nlohmann::json::array();
    for (const EdgeClassification& entry : result.per_edge) {
        nlohmann::json item{{"edges", entry.edge_count},
                            {"graphs_searched", entry.graphs_searched}};
        switch (entry.outcome) {
        case EdgeOutcome::None:
            item["outcome"] = "none";
            break;
        case EdgeOutcome::WitnessFound:
            item["outcome"] = "witness";
            item["witness"] = witness_to_json(*entry.witness);
            break;
        case EdgeOutcome::Unresolved:
            item["outcome"] = "unresolved";
            break;
        }
        per_edge.push_back(std::move(item));
    }
    nlohmann::json doc{{"level", result.level},
                       {"family", family_name(config.family)},
                       {"support", policy_name(config.search.support_policy)},
                       {"per_edge", std::move(per_edge)}};
    switch (result.outcome) {
    case MinimalOutcome::Found:
        doc["minimal_codimension"] = result.minimal_codimension;
        break;
    case MinimalOutcome::NoneUpToBound:
        doc["minimal_codimension"] = nullptr;
        break;
    case MinimalOutcome::Unresolved:
        doc["minimal_codimension"] = "unresolved";
        break;
    }
    return doc;
}

std::string render_classification_text(const ClassificationResult& result,
                                       const ClassifyConfig& config) {
    std::ostringstream out;
    out << "classification at level " << result.level << " (" << family_name(config.family)
        << " family, support " << policy_name(config.search.support_policy) << ")\n";
    for (const EdgeClassification& entry : result.per_edge) {
        out << "  edges " << entry.edge_count << ": ";
        switch (entry.outcome) {
        case EdgeOutcome::None:
            out << "none (exhausted " << entry.graphs_searched << " graph"
                << (entry.graphs_searched == 1 ? "" : "s") << ")\n";
            break;
        case EdgeOutcome::WitnessFound:
            out << "witness found\n";
            break;
        case EdgeOutcome::Unresolved:
            out << "unresolved (enumeration cap hit)\n";
            break;
        }
    }
    switch (result.outcome) {
    case MinimalOutcome::Found:
        out << "minimal codimension: " << result.minimal_codimension << '\n';
        if (const auto& entry = result.per_edge[static_cast<std::size_t>(
                result.minimal_codimension - result.per_edge.front().edge_count)];
            entry.witness) {
            out << render_witness_text(*entry.witness);
        }
        break;
    case MinimalOutcome::NoneUpToBound:
        out << "no junior ghost up to the edge bound\n";
        break;
    case MinimalOutcome::Unresolved:
        out << "unresolved: an enumeration cap was hit before a conclusion\n";
        break;
    }
    return out.str();
}

nlohmann::json sieve_to_json(const SieveReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const SieveEntry& entry : report.entries) {
        nlohmann::json admissible = nlohmann::json::array();
        for (const SieveAdmissible& adm : entry.admissible) {
            admissible.push_back({{"a", adm.twist},
                                  {"m", adm.multiplicity},
                                  {"in_kernel", adm.in_kernel}});
        }
        entries.push_back({{"triple", entry.triple.parts},
                           {"survives", entry.survives()},
                           {"admissible", std::move(admissible)}});
    }
    return {{"level", report.level},
            {"candidate_count", report.entries.size()},
            {"survivor_count", report.survivor_count},
            {"any_kernel_admissible", report.any_kernel_admissible},
            {"entries", std::move(entries)}};
}

std::string render_sieve_text(const SieveReport& report) {
    std::ostringstream out;
    const auto triple_text = [](const CandidateTriple& t) {
        std::ostringstream s;
        s << '{' << t.parts[0] << ',' << t.parts[1] << ',' << t.parts[2] << '}';
        return s.str();
    };

    out << "twist sieve at level " << report.level << '\n';
    out << "candidate multisets (three positive values summing below " << report.level
        << "): " << report.entries.size() << '\n';
    out << "eliminated: " << (report.entries.size() - static_cast<std::size_t>(report.survivor_count))
        << ", survivors: " << report.survivor_count << '\n';
    for (const SieveEntry& entry : report.entries) {
        if (!entry.survives()) {
            continue;
        }
        std::size_t kernel_count = 0;
        for (const SieveAdmissible& adm : entry.admissible) {
            kernel_count += adm.in_kernel ? 1u : 0u;
        }
        out << "  " << triple_text(entry.triple) << ": " << entry.admissible.size()
            << " admissible assignments, " << kernel_count << " in Ker boundary\n";
        for (const SieveAdmissible& adm : entry.admissible) {
            out << "    a=(" << adm.twist[0] << ',' << adm.twist[1] << ',' << adm.twist[2]
                << ") M=(" << adm.multiplicity[0] << ',' << adm.multiplicity[1] << ','
                << adm.multiplicity[2] << ") ker=" << (adm.in_kernel ? "yes" : "no") << '\n';
        }
    }
    out << "eliminated multisets:";
    bool first = true;
    for (const SieveEntry& entry : report.entries) {
        if (!entry.survives()) {
            out << (first ? " " : ", ") << triple_text(entry.triple);
            first = false;
        }
    }
    out << '\n';
    out << "every admissible assignment fails Ker boundary: "
        << (report.any_kernel_admissible ? "no" : "yes") << '\n';
    return out.str();
}

} // namespace levelghost

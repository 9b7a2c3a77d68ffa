#include "doctest.h"

#include <string>
#include <vector>

#include "json.hpp"

#include "levelghost/errors.hpp"
#include "levelghost/families.hpp"
#include "levelghost/io.hpp"
#include "levelghost/search.hpp"

using namespace levelghost;

namespace {

const char* kThetaText =
    "# two vertices joined by three edges, middle one reversed\n"
    "v 0 0\n"
    "v 1 0\n"
    "e 1 0 1\n"
    "e 2 1 0\n"
    "e 3 0 1\n";

bool same_shape(const StableGraph& lhs, const StableGraph& rhs) {
    if (lhs.vertices().size() != rhs.vertices().size() ||
        lhs.edges().size() != rhs.edges().size()) {
        return false;
    }
    for (std::size_t i = 0; i < lhs.vertices().size(); ++i) {
        const Vertex& a = lhs.vertices()[i];
        const Vertex& b = rhs.vertices()[i];
        if (a.id != b.id || a.genus != b.genus) {
            return false;
        }
    }
    for (std::size_t i = 0; i < lhs.edges().size(); ++i) {
        const Edge& a = lhs.edges()[i];
        const Edge& b = rhs.edges()[i];
        if (a.id != b.id || a.tail != b.tail || a.head != b.head) {
            return false;
        }
    }
    return true;
}

ParseIssue issue_of(const std::string& text, int* line = nullptr) {
    try {
        parse_graph_text(text);
    } catch (const GraphParseError& e) {
        if (line != nullptr) {
            *line = e.line();
        }
        return e.issue();
    }
    FAIL("expected a parse error");
    return ParseIssue::MalformedRecord;
}

} // namespace

TEST_CASE("the text form round-trips the stock theta graph") {
    const StableGraph parsed = parse_graph_text(kThetaText);
    CHECK(same_shape(parsed, theta_graph()));
    CHECK(same_shape(parse_graph_text(render_graph_text(parsed)), parsed));
}

TEST_CASE("comments, blank lines and stray spacing are tolerated") {
    const StableGraph parsed = parse_graph_text(
        "\n  v 0 1   # genus one\n\n\te 1   0 0  # a loop\n# trailing comment\n");
    CHECK(parsed.vertices().size() == 1);
    CHECK(parsed.edges().size() == 1);
    CHECK(parsed.vertices()[0].genus == 1);
}

TEST_CASE("each parse failure carries its diagnostic code and line") {
    int line = 0;

    CHECK(issue_of("v 0 0\nv 1 0\nq 1 0 1\n", &line) == ParseIssue::MalformedRecord);
    CHECK(line == 3);
    CHECK(issue_of("v 0 0 7\n") == ParseIssue::MalformedRecord); // wrong arity
    CHECK(issue_of("e 1 0\n") == ParseIssue::MalformedRecord);

    CHECK(issue_of("v zero 0\n", &line) == ParseIssue::BadInteger);
    CHECK(line == 1);
    CHECK(issue_of("v 0 1\ne 1 0 0x\n", &line) == ParseIssue::BadInteger);
    CHECK(line == 2);

    CHECK(issue_of("v 0 1\nv 0 1\ne 1 0 0\n", &line) == ParseIssue::DuplicateVertexId);
    CHECK(line == 2);
    CHECK(issue_of("v 0 1\ne 1 0 0\ne 1 0 0\n", &line) == ParseIssue::DuplicateEdgeId);
    CHECK(line == 3);
    CHECK(issue_of("v 0 1\ne 1 0 2\n", &line) == ParseIssue::UnknownEndpoint);
    CHECK(line == 2);
    CHECK(issue_of("v 0 -1\ne 1 0 0\n", &line) == ParseIssue::NegativeGenus);
    CHECK(line == 1);

    CHECK(issue_of("# nothing here\n", &line) == ParseIssue::NoVertices);
    CHECK(line == 0); // not tied to any line
    CHECK(issue_of("v 0 0\nv 1 1\ne 1 0 1\n") == ParseIssue::NotStable);
    CHECK(issue_of("v 0 2\nv 1 2\n") == ParseIssue::NotConnected);
}

TEST_CASE("the json form mirrors the text form") {
    const StableGraph theta = theta_graph();
    const nlohmann::json doc = graph_to_json(theta);
    CHECK(same_shape(parse_graph_json(doc), theta));

    CHECK_THROWS_AS(parse_graph_json(nlohmann::json::array()), GraphParseError);
    CHECK_THROWS_AS(parse_graph_json(nlohmann::json{{"vertices", 3}, {"edges", 4}}),
                    GraphParseError);
}

TEST_CASE("the auto-detecting reader sniffs the leading brace") {
    const StableGraph theta = theta_graph();
    CHECK(same_shape(parse_graph_auto(kThetaText), theta));
    CHECK(same_shape(parse_graph_auto(graph_to_json(theta).dump()), theta));
    CHECK(same_shape(parse_graph_auto("  \n " + graph_to_json(theta).dump()), theta));
}

TEST_CASE("witness documents round-trip and re-verify") {
    std::vector<GhostWitness> witnesses = preset_witnesses();
    for (std::int64_t l : {5, 8, 9}) {
        const SearchResult r = search_graph(theta_graph(), Level(l));
        witnesses.insert(witnesses.end(), r.witnesses.begin(), r.witnesses.end());
    }
    for (const GhostWitness& w : witnesses) {
        const nlohmann::json doc = witness_to_json(w);
        const GhostWitness back = witness_from_json(doc);
        CHECK(back.level == w.level);
        CHECK(back.multiplicity == w.multiplicity);
        CHECK(back.twist == w.twist);
        CHECK(back.age == w.age);
        CHECK(back.support == w.support);
        CHECK(back.codimension == w.codimension);
        CHECK(same_shape(back.graph, w.graph));
        // Serialization is stable: re-serializing gives the same bytes.
        CHECK(witness_to_json(back).dump() == doc.dump());
    }
}

TEST_CASE("tampered witness documents are rejected") {
    const nlohmann::json good = witness_to_json(preset_witness("l8"));

    nlohmann::json wrong_age = good;
    wrong_age["age"]["num"] = 7;
    CHECK_THROWS_AS(witness_from_json(wrong_age), StructuralError);

    nlohmann::json wrong_m = good;
    wrong_m["M"]["2"] = 5;
    CHECK_THROWS_AS(witness_from_json(wrong_m), StructuralError);

    nlohmann::json wrong_support = good;
    wrong_support["support"] = {1, 2};
    CHECK_THROWS_AS(witness_from_json(wrong_support), StructuralError);

    nlohmann::json missing_edge_value = good;
    missing_edge_value["a"].erase("1");
    CHECK_THROWS_AS(witness_from_json(missing_edge_value), StructuralError);

    nlohmann::json missing_field = good;
    missing_field.erase("level");
    CHECK_THROWS_AS(witness_from_json(missing_field), StructuralError);

    nlohmann::json wrong_codim = good;
    wrong_codim["codimension"] = 2;
    CHECK_THROWS_AS(witness_from_json(wrong_codim), StructuralError);

    // The unmodified document still parses, of course.
    CHECK(witness_from_json(good).age == AgeValue{6, 8});
}

TEST_CASE("a witness that fails its own claims never comes back") {
    // Start from a valid document and break the underlying data so that
    // re-verification itself fails (not just the recorded claims).
    nlohmann::json doc = witness_to_json(preset_witness("l9"));
    doc["M"]["1"] = 3;
    doc["M"]["2"] = 6;
    doc["M"]["3"] = 3;
    CHECK_THROWS_AS(witness_from_json(doc), StructuralError);
}

TEST_CASE("witness text rendering spells out the checks") {
    const std::string text = render_witness_text(preset_witness("l8"));
    CHECK(text.find("junior ghost witness") != std::string::npos);
    CHECK(text.find("level        8") != std::string::npos);
    CHECK(text.find("age          6/8 (junior)") != std::string::npos);
    CHECK(text.find("support      {1, 2, 3}") != std::string::npos);
    CHECK(text.find("codimension  3") != std::string::npos);
    CHECK(text.find("compatible=yes") != std::string::npos);
}

TEST_CASE("search reports state their conclusion") {
    const StableGraph theta = theta_graph();
    SearchConfig config;
    const SearchResult empty = search_graph(theta, Level(12), config);
    const std::string text = render_search_text(theta, Level(12), config, empty);
    CHECK(text.find("witnesses reported: 0") != std::string::npos);
    CHECK(text.find("no junior ghost exists under this policy (enumeration complete)") !=
          std::string::npos);

    const nlohmann::json doc = search_to_json(theta, Level(12), config, empty);
    CHECK(doc["complete"] == true);
    CHECK(doc["witness_count"] == 0);
    CHECK(doc["witnesses"].is_array());
    CHECK(doc["level"] == 12);

    const SearchResult found = search_graph(theta, Level(9), config);
    const std::string found_text = render_search_text(theta, Level(9), config, found);
    CHECK(found_text.find("witnesses reported: 18") != std::string::npos);
    CHECK(found_text.find("junior ghost witness") != std::string::npos);
}

TEST_CASE("classification reports include every edge count") {
    ClassifyConfig config;
    const ClassificationResult result = classify_level(Level(12), 4, config);
    const std::string text = render_classification_text(result, config);
    CHECK(text.find("edges 1: none") != std::string::npos);
    CHECK(text.find("edges 4: witness found") != std::string::npos);
    CHECK(text.find("minimal codimension: 4") != std::string::npos);

    const nlohmann::json doc = classification_to_json(result, config);
    CHECK(doc["minimal_codimension"] == 4);
    CHECK(doc["per_edge"].size() == 4);
    CHECK(doc["per_edge"][0]["outcome"] == "none");
    CHECK(doc["per_edge"][3]["outcome"] == "witness");
}

TEST_CASE("sieve reports name the eliminated multisets") {
    const SieveReport report = run_sieve(Level(12));
    const std::string text = render_sieve_text(report);
    CHECK(text.find("candidate multisets (three positive values summing below 12): 41") !=
          std::string::npos);
    CHECK(text.find("eliminated: 35, survivors: 6") != std::string::npos);
    CHECK(text.find("{2,4,5}") != std::string::npos); // its verdict is on display
    CHECK(text.find("every admissible assignment fails Ker boundary: yes") != std::string::npos);

    const nlohmann::json doc = sieve_to_json(report);
    CHECK(doc["candidate_count"] == 41);
    CHECK(doc["survivor_count"] == 6);
    CHECK(doc["any_kernel_admissible"] == false);
    CHECK(doc["entries"].size() == 41);
}

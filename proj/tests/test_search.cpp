#include "doctest.h"

#include <algorithm>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "levelghost/cochain.hpp"
#include "levelghost/errors.hpp"
#include "levelghost/search.hpp"

using namespace levelghost;

namespace {

using Pair = std::pair<std::vector<Residue>, std::vector<Residue>>;

std::set<Pair> witness_pairs(const SearchResult& result) {
    std::set<Pair> pairs;
    for (const GhostWitness& w : result.witnesses) {
        pairs.insert({w.multiplicity.values, w.twist.values});
    }
    return pairs;
}

// Brute force over every (M, a) in [0,l)^E x [0,l)^E, with no shortcuts at
// all; the real engine must find exactly the same witnesses.
std::set<Pair> naive_search(const StableGraph& graph, Level level, SupportPolicy policy) {
    const std::size_t ne = graph.edges().size();
    const std::int64_t l = level.modulus();
    std::set<Pair> pairs;
    std::vector<Residue> m(ne, 0);
    const auto bump = [&](std::vector<Residue>& v) {
        std::size_t pos = 0;
        while (pos < v.size() && ++v[pos] == l) {
            v[pos] = 0;
            ++pos;
        }
        return pos < v.size();
    };
    do {
        std::vector<Residue> a(ne, 0);
        do {
            const auto outcome =
                check_junior_ghost(graph, level, OneCochain{m}, OneCochain{a}, policy);
            if (std::holds_alternative<GhostWitness>(outcome)) {
                pairs.insert({m, a});
            }
        } while (bump(a));
    } while (bump(m));
    return pairs;
}

} // namespace

TEST_CASE("the kernel stream indexes the cycle space without repeats") {
    const StableGraph theta = theta_graph();
    const Level twelve(12);
    const KernelStream stream(theta, twelve, 1'000'000);
    REQUIRE(stream.size() == 144); // l^b1 = 12^2

    std::set<std::vector<Residue>> seen;
    for (std::uint64_t o = 0; o < stream.size(); ++o) {
        const OneCochain m = stream.at(o);
        CHECK(in_ker_boundary(theta, twelve, m));
        seen.insert(m.values);
    }
    CHECK(seen.size() == stream.size());
    CHECK(stream.at(0) == OneCochain{{0, 0, 0}});
    CHECK_THROWS_AS(stream.at(144), DomainError);
}

TEST_CASE("trees have a trivial cycle space") {
    const StableGraph bridge({{0, 1}, {1, 1}}, {{1, 0, 1}});
    const auto kernel = enumerate_multiplicities(bridge, Level(7));
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0] == OneCochain{{0}});
}

TEST_CASE("kernel enumeration refuses oversized cycle spaces") {
    CHECK_THROWS_AS(enumerate_multiplicities(banana_graph(8), Level(12), 1'000'000),
                    CapExceededError);
    CHECK_THROWS_AS(KernelStream(theta_graph(), Level(12), 100), CapExceededError);
}

TEST_CASE("twist enumeration matches its contract exactly") {
    const StableGraph theta = theta_graph();
    for (std::int64_t l : {5, 8, 9, 12}) {
        const Level level(l);
        for (const OneCochain& m : enumerate_multiplicities(theta, level)) {
            for (SupportPolicy policy : {SupportPolicy::Full, SupportPolicy::Any}) {
                // Naive generation in the same lexicographic order.
                std::vector<OneCochain> expect;
                std::vector<Residue> steps;
                for (Residue v : m.values) {
                    steps.push_back(gcd_with_level(v, level));
                }
                const Residue lo0 = policy == SupportPolicy::Full ? steps[0] : 0;
                const Residue lo1 = policy == SupportPolicy::Full ? steps[1] : 0;
                const Residue lo2 = policy == SupportPolicy::Full ? steps[2] : 0;
                for (Residue a0 = lo0; a0 < l; a0 += steps[0]) {
                    for (Residue a1 = lo1; a1 < l; a1 += steps[1]) {
                        for (Residue a2 = lo2; a2 < l; a2 += steps[2]) {
                            if (a0 + a1 + a2 < l) {
                                expect.push_back(OneCochain{{a0, a1, a2}});
                            }
                        }
                    }
                }
                CHECK(enumerate_twists(theta, level, m, policy) == expect);
            }
        }
    }
}

TEST_CASE("twist enumeration, frozen examples") {
    const StableGraph theta = theta_graph();
    CHECK(enumerate_twists(theta, Level(12), OneCochain{{2, 4, 2}}, SupportPolicy::Full) ==
          std::vector<OneCochain>{OneCochain{{2, 4, 2}}, OneCochain{{2, 4, 4}},
                                  OneCochain{{4, 4, 2}}});
    // All-unit gcds: every positive triple summing below 12, C(11,3) of them.
    CHECK(enumerate_twists(theta, Level(12), OneCochain{{1, 1, 1}}, SupportPolicy::Full).size() ==
          165);
    // An even middle multiplicity halves the choices on that edge.
    CHECK(enumerate_twists(theta, Level(12), OneCochain{{1, 2, 1}}, SupportPolicy::Full).size() ==
          70);
    // A zero multiplicity forces the (full-support) twist set empty.
    CHECK(enumerate_twists(theta, Level(12), OneCochain{{0, 2, 2}}, SupportPolicy::Full).empty());
}

TEST_CASE("theta witness counts across levels") {
    const StableGraph theta = theta_graph();
    const std::vector<std::pair<std::int64_t, std::size_t>> expect = {
        {2, 0}, {3, 0}, {4, 0}, {5, 12}, {6, 0}, {7, 18},
        {8, 12}, {9, 18}, {10, 12}, {11, 120}, {12, 0}};
    for (const auto& [l, count] : expect) {
        const SearchResult result = search_graph(theta, Level(l));
        CHECK(result.complete);
        CHECK(result.kernel_cochains == static_cast<std::uint64_t>(l) * static_cast<std::uint64_t>(l));
        CHECK(result.witnesses.size() == count);
    }
}

TEST_CASE("the twelve level-5 witnesses, by value") {
    const SearchResult result = search_graph(theta_graph(), Level(5));
    const std::set<Pair> expect = {
        {{1, 2, 1}, {1, 2, 1}}, {{1, 3, 2}, {2, 1, 1}}, {{1, 4, 3}, {1, 1, 2}},
        {{2, 1, 4}, {2, 1, 1}}, {{2, 3, 1}, {1, 1, 2}}, {{2, 4, 2}, {1, 2, 1}},
        {{3, 1, 3}, {1, 2, 1}}, {{3, 2, 4}, {1, 1, 2}}, {{3, 4, 1}, {2, 1, 1}},
        {{4, 1, 2}, {1, 1, 2}}, {{4, 2, 3}, {2, 1, 1}}, {{4, 3, 4}, {1, 2, 1}}};
    CHECK(witness_pairs(result) == expect);
    for (const GhostWitness& w : result.witnesses) {
        CHECK(w.age == AgeValue{4, 5});
        CHECK(w.codimension == 3);
    }
}

TEST_CASE("named witnesses are re-found at their levels") {
    const StableGraph theta = theta_graph();
    CHECK(witness_pairs(search_graph(theta, Level(8)))
              .contains(Pair{{1, 3, 2}, {2, 2, 2}}));
    CHECK(witness_pairs(search_graph(theta, Level(9)))
              .contains(Pair{{1, 2, 1}, {1, 4, 1}}));
    CHECK(witness_pairs(search_graph(theta, Level(10)))
              .contains(Pair{{2, 4, 2}, {2, 4, 2}}));

    const SearchResult b4 = search_graph(banana_graph(4), Level(12));
    CHECK(b4.witnesses.size() == 24);
    CHECK(witness_pairs(b4).contains(Pair{{1, 5, 2, 2}, {2, 2, 2, 2}}));
}

TEST_CASE("the engine agrees with a no-shortcut brute force") {
    const StableGraph theta = theta_graph();
    for (std::int64_t l = 2; l <= 9; ++l) {
        for (SupportPolicy policy : {SupportPolicy::Full, SupportPolicy::Any}) {
            SearchConfig config;
            config.support_policy = policy;
            const SearchResult result = search_graph(theta, Level(l), config);
            CHECK(result.complete);
            CHECK(witness_pairs(result) == naive_search(theta, Level(l), policy));
        }
    }
}

TEST_CASE("brute force agreement on a graph with a loop") {
    // One genus-one vertex with a loop: every multiplicity is balanced, and
    // the loop circuit forces a (.) m = 0 on the loop.
    const StableGraph loop({{0, 1}}, {{1, 0, 0}});
    for (std::int64_t l = 2; l <= 9; ++l) {
        for (SupportPolicy policy : {SupportPolicy::Full, SupportPolicy::Any}) {
            SearchConfig config;
            config.support_policy = policy;
            const SearchResult result = search_graph(loop, Level(l), config);
            CHECK(result.complete);
            CHECK(witness_pairs(result) == naive_search(loop, Level(l), policy));
        }
    }
}

TEST_CASE("worker counts never change the answer") {
    const StableGraph theta = theta_graph();
    for (std::int64_t l : {11, 12}) {
        SearchConfig one;
        one.workers = 1;
        SearchConfig three;
        three.workers = 3;
        SearchConfig eight;
        eight.workers = 8;
        const SearchResult r1 = search_graph(theta, Level(l), one);
        const SearchResult r3 = search_graph(theta, Level(l), three);
        const SearchResult r8 = search_graph(theta, Level(l), eight);
        REQUIRE(r1.witnesses.size() == r3.witnesses.size());
        REQUIRE(r1.witnesses.size() == r8.witnesses.size());
        CHECK(r1.candidates == r3.candidates);
        CHECK(r1.candidates == r8.candidates);
        for (std::size_t i = 0; i < r1.witnesses.size(); ++i) {
            CHECK(r1.witnesses[i].multiplicity == r3.witnesses[i].multiplicity);
            CHECK(r1.witnesses[i].twist == r3.witnesses[i].twist);
            CHECK(r1.witnesses[i].multiplicity == r8.witnesses[i].multiplicity);
            CHECK(r1.witnesses[i].twist == r8.witnesses[i].twist);
        }
    }
}

TEST_CASE("stopping at the first witness returns the enumeration-order head") {
    const StableGraph theta = theta_graph();
    SearchConfig all;
    const SearchResult everything = search_graph(theta, Level(11), all);
    REQUIRE(!everything.witnesses.empty());

    SearchConfig first;
    first.stop_at_first = true;
    const SearchResult head = search_graph(theta, Level(11), first);
    REQUIRE(head.witnesses.size() == 1);
    CHECK(head.witnesses[0].multiplicity == everything.witnesses[0].multiplicity);
    CHECK(head.witnesses[0].twist == everything.witnesses[0].twist);
}

TEST_CASE("symmetry folding keeps one witness per orbit") {
    SearchConfig dedupe;
    dedupe.dedupe_by_symmetry = true;
    const std::vector<std::pair<std::int64_t, std::size_t>> expect = {
        {5, 2}, {8, 1}, {9, 3}, {11, 15}};
    for (const auto& [l, orbits] : expect) {
        const SearchResult full = search_graph(theta_graph(), Level(l));
        const SearchResult folded = search_graph(theta_graph(), Level(l), dedupe);
        CHECK(folded.witnesses.size() == orbits);
        // Every kept witness is one of the originals.
        const auto all_pairs = witness_pairs(full);
        for (const auto& pair : witness_pairs(folded)) {
            CHECK(all_pairs.contains(pair));
        }
    }
    const SearchResult b4 = search_graph(banana_graph(4), Level(12), dedupe);
    CHECK(b4.witnesses.size() == 1); // all 24 are symmetric images of one
}

TEST_CASE("caps are enforced loudly") {
    SearchConfig tiny_kernel;
    tiny_kernel.max_kernel_cochains = 100;
    CHECK_THROWS_AS(search_graph(theta_graph(), Level(12), tiny_kernel), CapExceededError);

    SearchConfig tiny_candidates;
    tiny_candidates.max_candidates = 5;
    CHECK_THROWS_AS(search_graph(theta_graph(), Level(11), tiny_candidates), CapExceededError);
}

TEST_CASE("searching rejects unstable graphs up front") {
    const StableGraph unstable({{0, 0}, {1, 1}}, {{1, 0, 1}});
    CHECK_THROWS_AS(search_graph(unstable, Level(5)), DomainError);
}

TEST_CASE("relabelling vertices and edges does not change the verdict") {
    // The theta graph with ids shuffled: vertices 4/9, edges 7, 2, 5.
    const StableGraph shuffled({{4, 0}, {9, 0}},
                               {{7, 4, 9}, {2, 9, 4}, {5, 4, 9}});
    const SearchResult stock = search_graph(theta_graph(), Level(8));
    const SearchResult renamed = search_graph(shuffled, Level(8));
    CHECK(renamed.witnesses.size() == stock.witnesses.size());
    CHECK(witness_pairs(renamed) == witness_pairs(stock));
}

TEST_CASE("the all-stable generator hits the known censuses") {
    CHECK(all_stable_graphs(1, 2).size() == 5);
    CHECK(all_stable_graphs(2, 2).size() == 18);
    CHECK(all_stable_graphs(3, 2).size() == 86);
    for (const StableGraph& g : all_stable_graphs(2, 2)) {
        CHECK(g.edges().size() == 2);
        CHECK(validate_stable(g));
        for (const Vertex& v : g.vertices()) {
            CHECK(v.genus <= 2);
        }
    }
}

TEST_CASE("classification spot checks") {
    ClassifyConfig banana;
    const ClassificationResult l5 = classify_level(Level(5), 4, banana);
    CHECK(l5.outcome == MinimalOutcome::Found);
    CHECK(l5.minimal_codimension == 3);
    CHECK(l5.per_edge.size() == 4);
    CHECK(l5.per_edge[0].outcome == EdgeOutcome::None);
    CHECK(l5.per_edge[1].outcome == EdgeOutcome::None);
    CHECK(l5.per_edge[2].outcome == EdgeOutcome::WitnessFound);

    const ClassificationResult l12 = classify_level(Level(12), 4, banana);
    CHECK(l12.outcome == MinimalOutcome::Found);
    CHECK(l12.minimal_codimension == 4);

    const ClassificationResult l4 = classify_level(Level(4), 4, banana);
    CHECK(l4.outcome == MinimalOutcome::NoneUpToBound);

    const ClassificationResult l10 = classify_level(Level(10), 3, banana);
    CHECK(l10.outcome == MinimalOutcome::Found);
    CHECK(l10.minimal_codimension == 3);
}

TEST_CASE("an enumeration cap below the first witness leaves the level unresolved") {
    ClassifyConfig config;
    config.search.max_kernel_cochains = 10; // the two-edge cycle space at level 12 has 12
    const ClassificationResult result = classify_level(Level(12), 4, config);
    CHECK(result.outcome == MinimalOutcome::Unresolved);
}

TEST_CASE("the all-stable family classification also finds codimension three") {
    ClassifyConfig config;
    config.family = GraphFamily::AllStable;
    const ClassificationResult l8 = classify_level(Level(8), 3, config);
    CHECK(l8.outcome == MinimalOutcome::Found);
    CHECK(l8.minimal_codimension == 3);
    CHECK(l8.per_edge[2].graphs_searched <= 86);
}

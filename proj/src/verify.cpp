#include "levelghost/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "levelghost/cochain.hpp"
#include "levelghost/errors.hpp"
#include "levelghost/families.hpp"
#include "levelghost/golden.hpp"
#include "levelghost/search.hpp"
#include "levelghost/sieve.hpp"
#include "levelghost/table.hpp"

namespace levelghost {

namespace {

bool contains_pair(const SearchResult& result, const OneCochain& m, const OneCochain& a) {
    return std::any_of(result.witnesses.begin(), result.witnesses.end(),
                       [&](const GhostWitness& w) {
                           return w.multiplicity == m && w.twist == a;
                       });
}

SearchConfig full_search(int workers) {
    SearchConfig config;
    config.support_policy = SupportPolicy::Full;
    config.stop_at_first = false;
    config.workers = workers;
    return config;
}

// --- table parity -----------------------------------------------------------

VerifyItem check_table_parity() {
    VerifyItem item{"table-parity",
                    "multiplication tables at levels 6 and 12 match the reference grids", false,
                    ""};
    int mismatches = 0;
    std::ostringstream details;
    for (const auto& [level, grid] :
         {std::pair<std::int64_t, const char*>{6, golden::kReferenceTable6},
          std::pair<std::int64_t, const char*>{12, golden::kReferenceTable12}}) {
        const OdotTable got = build_odot_table(Level(level));
        const OdotTable want = golden::decode_reference_table(level, grid);
        int comparisons = 0;
        for (std::size_t a = 0; a < got.cells.size(); ++a) {
            for (std::size_t m = 0; m < got.cells[a].size(); ++m) {
                comparisons += 2; // blank status and value
                const auto& g = got.cells[a][m];
                const auto& w = want.cells[a][m];
                if (g.has_value() != w.has_value() || (g.has_value() && *g != *w)) {
                    ++mismatches;
                }
            }
        }
        details << "l=" << level << ": " << comparisons << " comparisons; ";
    }
    details << mismatches << " mismatches";
    item.details = details.str();
    item.passed = mismatches == 0;
    return item;
}

// --- closed-form families ----------------------------------------------------

VerifyItem check_prime_family(int workers) {
    VerifyItem item{"prime-family",
                    "closed-form witnesses at prime levels verify and are re-found by search",
                    false, ""};
    int verified = 0;
    int refound = 0;
    const StableGraph theta = theta_graph();
    for (std::int64_t p : {5, 7, 11, 13}) {
        const SearchResult searched = search_graph(theta, Level(p), full_search(workers));
        for (Residue n : {1, 2}) {
            const GhostWitness w = construct_prime_family(p, n);
            if (age_equal(w.age, AgeValue{p + 3, 2 * p})) {
                ++verified;
            }
            if (contains_pair(searched, w.multiplicity, w.twist)) {
                ++refound;
            }
        }
    }
    std::ostringstream details;
    details << verified << " instances with age (p+3)/(2p); " << refound
            << " re-found by exhaustive search";
    item.details = details.str();
    item.passed = verified == 8 && refound == 8;
    return item;
}

VerifyItem check_presets_small(int workers) {
    VerifyItem item{"preset-witnesses-small",
                    "the level-8 and level-9 presets verify and are re-found by search", false, ""};
    const GhostWitness w8 = preset_witness("l8");
    const GhostWitness w9 = preset_witness("l9");
    const bool shapes_ok = w8.multiplicity == OneCochain{{1, 3, 2}} &&
                           w8.twist == OneCochain{{2, 2, 2}} && w8.age == AgeValue{6, 8} &&
                           w9.multiplicity == OneCochain{{1, 2, 1}} &&
                           w9.twist == OneCochain{{1, 4, 1}} && w9.age == AgeValue{6, 9};

    const StableGraph theta = theta_graph();
    const SearchResult s8 = search_graph(theta, Level(8), full_search(workers));
    const SearchResult s9 = search_graph(theta, Level(9), full_search(workers));
    const bool found8 = contains_pair(s8, w8.multiplicity, w8.twist);
    const bool found9 = contains_pair(s9, w9.multiplicity, w9.twist);

    std::ostringstream details;
    details << "search found " << s8.witnesses.size() << " witnesses at level 8 and "
            << s9.witnesses.size() << " at level 9";
    item.details = details.str();
    item.passed = shapes_ok && found8 && found9 && s8.witnesses.size() == 12 &&
                  s9.witnesses.size() == 18;
    return item;
}

// --- three-edge non-existence -------------------------------------------------

VerifyItem check_three_edge_nonexistence(int workers) {
    VerifyItem item{"three-edge-nonexistence",
                    "no full-support three-edge junior ghost at levels 2, 3, 4, 6 and 12", false,
                    ""};
    const StableGraph theta = theta_graph();
    bool theta_clear = true;
    for (std::int64_t l : {2, 3, 4, 6, 12}) {
        const SearchResult r = search_graph(theta, Level(l), full_search(workers));
        theta_clear = theta_clear && r.complete && r.witnesses.empty();
    }

    const std::vector<StableGraph> graphs = all_stable_graphs(3, 2);
    bool all_stable_clear = graphs.size() == 86;
    for (const StableGraph& graph : graphs) {
        const SearchResult r = search_graph(graph, Level(12), full_search(workers));
        all_stable_clear = all_stable_clear && r.complete && r.witnesses.empty();
    }

    std::ostringstream details;
    details << "theta empty at levels 2,3,4,6,12; all " << graphs.size()
            << " three-edge stable graphs (genus cap 2) empty at level 12";
    item.details = details.str();
    item.passed = theta_clear && all_stable_clear;
    return item;
}

// --- the level-12 sieve --------------------------------------------------------

VerifyItem check_sieve_l12() {
    VerifyItem item{"sieve-l12",
                    "the level-12 sieve reproduces the survivor multisets and kernel failures",
                    false, ""};
    const SieveReport report = run_sieve(Level(12));

    std::set<std::array<std::int64_t, 3>> survivors;
    bool extra_eliminated = false;
    bool saw_extra = false;
    for (const SieveEntry& entry : report.entries) {
        if (entry.survives()) {
            survivors.insert(entry.triple.parts);
        }
        if (entry.triple.parts == std::array<std::int64_t, 3>{2, 4, 5}) {
            saw_extra = true;
            extra_eliminated = !entry.survives();
        }
    }

    const std::set<std::array<std::int64_t, 3>> expected(golden::kSurvivorMultisets.begin(),
                                                         golden::kSurvivorMultisets.end());
    const std::set<std::array<std::int64_t, 3>> tabulated(golden::kTabulatedMultisets40.begin(),
                                                          golden::kTabulatedMultisets40.end());
    bool survivors_tabulated = true;
    for (const auto& s : survivors) {
        survivors_tabulated = survivors_tabulated && tabulated.contains(s);
    }

    int named_present = 0;
    for (const golden::NamedAdmissible& named : golden::kNamedAdmissible) {
        std::array<std::int64_t, 3> key = named.twist;
        std::sort(key.begin(), key.end());
        for (const SieveEntry& entry : report.entries) {
            if (entry.triple.parts != key) {
                continue;
            }
            for (const SieveAdmissible& adm : entry.admissible) {
                if (adm.twist == named.twist && adm.multiplicity == named.multiplicity) {
                    ++named_present;
                    break;
                }
            }
            break;
        }
    }

    std::ostringstream details;
    details << report.entries.size() << " candidates; " << report.survivor_count << " survivors; "
            << named_present << "/24 named assignments present; "
            << (report.any_kernel_admissible ? "some" : "no")
            << " admissible assignment lies in Ker boundary; {2,4,5} "
            << (saw_extra ? (extra_eliminated ? "eliminated" : "SURVIVES") : "missing");
    item.details = details.str();
    item.passed = report.entries.size() == 41 && survivors == expected && survivors_tabulated &&
                  named_present == 24 && !report.any_kernel_admissible && saw_extra &&
                  extra_eliminated;
    return item;
}

// --- the codimension-4 witness --------------------------------------------------

VerifyItem check_codim4(int workers) {
    VerifyItem item{"codim4-witness",
                    "the level-12 four-edge preset verifies and is re-found by search", false, ""};
    const GhostWitness w = preset_witness("l12codim4");
    const bool shape_ok = w.multiplicity == OneCochain{{1, 5, 2, 2}} &&
                          w.twist == OneCochain{{2, 2, 2, 2}} && w.age == AgeValue{8, 12} &&
                          w.codimension == 4;
    const SearchResult searched = search_graph(banana_graph(4), Level(12), full_search(workers));
    std::ostringstream details;
    details << "witness age 8/12; search found " << searched.witnesses.size()
            << " witnesses including the preset";
    item.details = details.str();
    item.passed = shape_ok && searched.witnesses.size() == 24 &&
                  contains_pair(searched, w.multiplicity, w.twist);
    return item;
}

// --- classification sweep ---------------------------------------------------------

VerifyItem check_classification_sweep(int workers) {
    VerifyItem item{"classification-sweep",
                    "minimal codimension over the banana family matches expectations for levels "
                    "2..15",
                    false, ""};
    ClassifyConfig config;
    config.family = GraphFamily::Banana;
    config.search = full_search(workers);

    int matched = 0;
    for (const golden::SweepExpectation& expect : golden::kClassificationSweep) {
        const ClassificationResult result = classify_level(Level(expect.level), 4, config);
        const bool ok = expect.minimal == 0
                            ? result.outcome == MinimalOutcome::NoneUpToBound
                            : result.outcome == MinimalOutcome::Found &&
                                  result.minimal_codimension == expect.minimal;
        matched += ok ? 1 : 0;
    }
    std::ostringstream details;
    details << matched << "/" << golden::kClassificationSweep.size()
            << " levels match (codimension 3 everywhere except 4 at level 12; none at 2,3,4,6)";
    item.details = details.str();
    item.passed = matched == static_cast<int>(golden::kClassificationSweep.size());
    return item;
}

// --- scaling lifts -------------------------------------------------------------------

VerifyItem check_lift_commutes(int workers) {
    VerifyItem item{"lift-commutes",
                    "scaling lifts preserve age and are re-found at the scaled level", false, ""};
    const StableGraph theta = theta_graph();

    std::map<std::int64_t, SearchResult> searched;
    const auto search_at = [&](std::int64_t l) -> const SearchResult& {
        auto it = searched.find(l);
        if (it == searched.end()) {
            it = searched.emplace(l, search_graph(theta, Level(l), full_search(workers))).first;
        }
        return it->second;
    };

    int witnesses_total = 0;
    int checks = 0;
    int good = 0;
    for (std::int64_t l = 2; l <= 8; ++l) {
        const SearchResult& base = search_at(l);
        witnesses_total += static_cast<int>(base.witnesses.size());
        for (const GhostWitness& w : base.witnesses) {
            for (std::int64_t k = 1; k <= 3; ++k) {
                ++checks;
                const GhostWitness lifted = lift_witness(w, k);
                if (age_equal(lifted.age, w.age) &&
                    contains_pair(search_at(l * k), lifted.multiplicity, lifted.twist)) {
                    ++good;
                }
            }
        }
    }
    std::ostringstream details;
    details << witnesses_total << " witnesses at levels up to 8; " << good << "/" << checks
            << " lifts with k<=3 preserve age and are re-found";
    item.details = details.str();
    item.passed = witnesses_total == 42 && checks == 126 && good == checks;
    return item;
}

// --- coboundary oracle cross-check -----------------------------------------------------

VerifyItem check_oracle_equivalence() {
    VerifyItem item{"oracle-equivalence",
                    "circuit-based coboundary membership agrees with the enumeration oracle",
                    false, ""};
    const StableGraph theta = theta_graph();
    const Level twelve(12);

    int exhaustive = 0;
    int exhaustive_agree = 0;
    OneCochain f{{0, 0, 0}};
    for (;;) {
        ++exhaustive;
        if (in_im_coboundary(theta, twelve, f) == in_im_coboundary_oracle(theta, twelve, f)) {
            ++exhaustive_agree;
        }
        std::size_t pos = 0;
        while (pos < f.values.size()) {
            if (++f.values[pos] < 12) {
                break;
            }
            f.values[pos] = 0;
            ++pos;
        }
        if (pos == f.values.size()) {
            break;
        }
    }

    // Deterministic pseudo-random instances.  Raw modulo keeps the stream
    // identical across standard libraries, which matters for report bytes.
    std::mt19937 rng(20260814u);
    const auto pick = [&](std::uint32_t n) { return static_cast<int>(rng() % n); };

    int randomized = 0;
    int randomized_agree = 0;
    while (randomized < 1000) {
        const int nv = 1 + pick(4);
        const int ne = 1 + pick(6);
        std::vector<Vertex> vertices;
        for (int v = 0; v < nv; ++v) {
            vertices.push_back({v, pick(3)});
        }
        std::vector<Edge> edges;
        for (int e = 1; e <= ne; ++e) {
            edges.push_back({e, pick(static_cast<std::uint32_t>(nv)),
                             pick(static_cast<std::uint32_t>(nv))});
        }
        try {
            const StableGraph graph(std::move(vertices), std::move(edges));
            if (!validate_stable(graph)) {
                continue;
            }
            const Level level(2 + pick(6)); // 2..7
            OneCochain sample;
            sample.values.reserve(static_cast<std::size_t>(ne));
            for (int e = 0; e < ne; ++e) {
                sample.values.push_back(pick(static_cast<std::uint32_t>(level.modulus())));
            }
            ++randomized;
            if (in_im_coboundary(graph, level, sample) ==
                in_im_coboundary_oracle(graph, level, sample)) {
                ++randomized_agree;
            }
        } catch (const StructuralError&) {
            continue; // disconnected draw; try again
        }
    }

    std::ostringstream details;
    details << exhaustive_agree << "/" << exhaustive << " exhaustive level-12 cases and "
            << randomized_agree << "/" << randomized << " randomized cases agree";
    item.details = details.str();
    item.passed = exhaustive == 1728 && exhaustive_agree == exhaustive &&
                  randomized_agree == randomized;
    return item;
}

} // namespace

VerifyReport run_verification_battery(int workers) {
    VerifyReport report;
    report.items.push_back(check_table_parity());
    report.items.push_back(check_prime_family(workers));
    report.items.push_back(check_presets_small(workers));
    report.items.push_back(check_three_edge_nonexistence(workers));
    report.items.push_back(check_sieve_l12());
    report.items.push_back(check_codim4(workers));
    report.items.push_back(check_classification_sweep(workers));
    report.items.push_back(check_lift_commutes(workers));
    report.items.push_back(check_oracle_equivalence());
    report.all_passed = std::all_of(report.items.begin(), report.items.end(),
                                    [](const VerifyItem& item) { return item.passed; });
    return report;
}

std::string render_verify_text(const VerifyReport& report) {
    std::ostringstream out;
    out << "verification battery\n";
    int passed = 0;
    for (const VerifyItem& item : report.items) {
        out << (item.passed ? "[PASS] " : "[FAIL] ") << item.id << ": " << item.description
            << " (" << item.details << ")\n";
        passed += item.passed ? 1 : 0;
    }
    out << "result: " << passed << " passed, " << (report.items.size() - static_cast<std::size_t>(passed))
        << " failed\n";
    return out.str();
}

std::string verify_report_json(const VerifyReport& report) {
    nlohmann::json items = nlohmann::json::array();
    for (const VerifyItem& item : report.items) {
        items.push_back({{"id", item.id},
                         {"description", item.description},
                         {"passed", item.passed},
                         {"details", item.details}});
    }
    const nlohmann::json doc{{"items", std::move(items)}, {"all_passed", report.all_passed}};
    return doc.dump(2) + "\n";
}

} // namespace levelghost

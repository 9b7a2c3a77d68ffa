// Command-line front end.  Every subcommand prints deterministic bytes for a
// given invocation: identical runs (and identical runs with different worker
// counts) must produce identical output, so nothing here reports timings,
// thread counts, or other environment-dependent facts.
//
// Exit codes:
//   0  success, including a completed search that found nothing
//   1  verification failure, or --expect-witness with an empty result
//   2  invalid input (bad flags, malformed graph or witness documents)
//   3  incomplete search (an enumeration cap was hit before the answer)
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "levelghost/cochain.hpp"
#include "levelghost/errors.hpp"
#include "levelghost/families.hpp"
#include "levelghost/io.hpp"
#include "levelghost/search.hpp"
#include "levelghost/sieve.hpp"
#include "levelghost/table.hpp"
#include "levelghost/verify.hpp"

namespace {

using namespace levelghost;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot read file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

TableFormat table_format_of(const std::string& name) {
    if (name == "text") {
        return TableFormat::Text;
    }
    if (name == "csv") {
        return TableFormat::Csv;
    }
    return TableFormat::Json;
}

SupportPolicy policy_of(const std::string& name) {
    return name == "any" ? SupportPolicy::Any : SupportPolicy::Full;
}

void print_witness(const GhostWitness& witness, const std::string& format) {
    if (format == "text") {
        std::cout << render_witness_text(witness);
    } else {
        std::cout << witness_to_json(witness).dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"junior ghost search on decorated stable graphs"};
    app.require_subcommand(1);

    // --- table ---------------------------------------------------------------
    auto* table_cmd = app.add_subcommand("table", "print the a (.) m table for one level");
    std::int64_t table_level = 0;
    std::string table_format = "text";
    table_cmd->add_option("--level", table_level, "level (modulus), at least 2")->required();
    table_cmd->add_option("--format", table_format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // --- search ----------------------------------------------------------------
    auto* search_cmd =
        app.add_subcommand("search", "search one graph for junior ghost witnesses");
    std::string search_graph_path;
    int search_banana = 0;
    std::int64_t search_level = 0;
    std::string search_support = "full";
    bool search_all = false;
    bool search_dedupe = false;
    int search_workers = 0;
    std::uint64_t search_max_candidates = 0;
    std::uint64_t search_max_kernel = 1'000'000;
    bool search_expect = false;
    std::string search_format = "text";
    search_cmd->add_option("--graph", search_graph_path, "graph file (text or json form)");
    search_cmd->add_option("--banana", search_banana,
                           "use the two-vertex graph with this many parallel edges");
    search_cmd->add_option("--level", search_level, "level (modulus), at least 2")->required();
    search_cmd->add_option("--support", search_support, "full or any")
        ->check(CLI::IsMember({"full", "any"}));
    search_cmd->add_flag("--all", search_all, "enumerate every witness instead of stopping at one");
    search_cmd->add_flag("--dedupe", search_dedupe,
                         "fold witnesses equivalent under graph symmetry (two-vertex graphs)");
    search_cmd->add_option("--workers", search_workers, "worker threads (0 = automatic)");
    search_cmd->add_option("--max-candidates", search_max_candidates,
                           "stop after this many twist candidates (0 = unlimited)");
    search_cmd->add_option("--max-kernel-cochains", search_max_kernel,
                           "refuse enumerations larger than this");
    search_cmd->add_flag("--expect-witness", search_expect,
                         "exit with status 1 when no witness is found");
    search_cmd->add_option("--format", search_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // --- classify ------------------------------------------------------------------
    auto* classify_cmd =
        app.add_subcommand("classify", "minimal witness codimension over a graph family");
    std::int64_t classify_lvl = 0;
    int classify_max_edges = 4;
    std::string classify_family = "banana";
    int classify_genus_cap = 2;
    std::string classify_support = "full";
    int classify_workers = 0;
    std::string classify_format = "text";
    classify_cmd->add_option("--level", classify_lvl, "level (modulus), at least 2")->required();
    classify_cmd->add_option("--max-edges", classify_max_edges, "largest edge count to try");
    classify_cmd->add_option("--family", classify_family, "banana or all-stable")
        ->check(CLI::IsMember({"banana", "all-stable"}));
    classify_cmd->add_option("--genus-cap", classify_genus_cap,
                             "vertex genus bound for the all-stable family");
    classify_cmd->add_option("--support", classify_support, "full or any")
        ->check(CLI::IsMember({"full", "any"}));
    classify_cmd->add_option("--workers", classify_workers, "worker threads (0 = automatic)");
    classify_cmd->add_option("--format", classify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // --- family ----------------------------------------------------------------------
    auto* family_cmd =
        app.add_subcommand("family", "closed-form witness on the theta graph at a prime level");
    std::int64_t family_prime = 0;
    std::int64_t family_n = 1;
    std::string family_format = "json";
    family_cmd->add_option("--prime", family_prime, "prime level, at least 5")->required();
    family_cmd->add_option("--n", family_n, "scaling parameter, nonzero mod the level");
    family_cmd->add_option("--format", family_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // --- preset -----------------------------------------------------------------------
    auto* preset_cmd = app.add_subcommand("preset", "print one of the named stock witnesses");
    std::string preset_name;
    std::string preset_format = "json";
    preset_cmd->add_option("--name", preset_name, "l8, l9, or l12codim4")
        ->required()
        ->check(CLI::IsMember({"l8", "l9", "l12codim4"}));
    preset_cmd->add_option("--format", preset_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // --- lift --------------------------------------------------------------------------
    auto* lift_cmd =
        app.add_subcommand("lift", "scale a witness document from level l to level k*l");
    std::string lift_path;
    std::int64_t lift_k = 1;
    std::string lift_format = "json";
    lift_cmd->add_option("--witness", lift_path, "witness document (json)")->required();
    lift_cmd->add_option("--k", lift_k, "scaling factor, at least 1")->required();
    lift_cmd->add_option("--format", lift_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // --- sieve -------------------------------------------------------------------------
    auto* sieve_cmd = app.add_subcommand(
        "sieve", "eliminate three-part twist multisets on the theta graph at one level");
    std::int64_t sieve_level = 0;
    std::string sieve_format = "text";
    sieve_cmd->add_option("--level", sieve_level, "level (modulus), at least 4")->required();
    sieve_cmd->add_option("--format", sieve_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // --- oracle ------------------------------------------------------------------------
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "cross-check coboundary membership against brute-force enumeration");
    std::string oracle_graph_path;
    std::int64_t oracle_level = 0;
    int oracle_samples = 200;
    oracle_cmd->add_option("--graph", oracle_graph_path, "graph file (text or json form)")
        ->required();
    oracle_cmd->add_option("--level", oracle_level, "level (modulus), at least 2")->required();
    oracle_cmd->add_option("--samples", oracle_samples, "number of sampled cochains");

    // --- verify-paper --------------------------------------------------------------------
    auto* verify_cmd =
        app.add_subcommand("verify-paper", "run the built-in verification battery");
    int verify_workers = 0;
    std::string verify_format = "text";
    verify_cmd->add_option("--workers", verify_workers, "worker threads (0 = automatic)");
    verify_cmd->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*table_cmd) {
            const OdotTable table = build_odot_table(Level(table_level));
            std::cout << emit_table(table, table_format_of(table_format));
            return 0;
        }

        if (*search_cmd) {
            if (search_graph_path.empty() == (search_banana == 0)) {
                std::cerr << "search: give exactly one of --graph and --banana\n";
                return 2;
            }
            const StableGraph graph = search_banana > 0
                                          ? banana_graph(search_banana)
                                          : parse_graph_auto(slurp(search_graph_path));
            SearchConfig config;
            config.support_policy = policy_of(search_support);
            config.stop_at_first = !search_all;
            config.dedupe_by_symmetry = search_dedupe;
            config.workers = search_workers;
            config.max_candidates = static_cast<std::size_t>(search_max_candidates);
            config.max_kernel_cochains = static_cast<std::size_t>(search_max_kernel);
            const Level level(search_level);
            const SearchResult result = search_graph(graph, level, config);
            if (search_format == "json") {
                std::cout << search_to_json(graph, level, config, result).dump(2) << "\n";
            } else {
                std::cout << render_search_text(graph, level, config, result);
            }
            if (result.witnesses.empty() && !result.complete) {
                return 3; // cannot certify non-existence
            }
            if (search_expect && result.witnesses.empty()) {
                return 1;
            }
            return 0;
        }

        if (*classify_cmd) {
            ClassifyConfig config;
            config.family =
                classify_family == "all-stable" ? GraphFamily::AllStable : GraphFamily::Banana;
            config.genus_cap = classify_genus_cap;
            config.search.support_policy = policy_of(classify_support);
            config.search.workers = classify_workers;
            const ClassificationResult result =
                classify_level(Level(classify_lvl), classify_max_edges, config);
            if (classify_format == "json") {
                std::cout << classification_to_json(result, config).dump(2) << "\n";
            } else {
                std::cout << render_classification_text(result, config);
            }
            return result.outcome == MinimalOutcome::Unresolved ? 3 : 0;
        }

        if (*family_cmd) {
            print_witness(construct_prime_family(family_prime, family_n), family_format);
            return 0;
        }

        if (*preset_cmd) {
            print_witness(preset_witness(preset_name), preset_format);
            return 0;
        }

        if (*lift_cmd) {
            const GhostWitness base =
                witness_from_json(nlohmann::json::parse(slurp(lift_path)));
            print_witness(lift_witness(base, lift_k), lift_format);
            return 0;
        }

        if (*sieve_cmd) {
            const SieveReport report = run_sieve(Level(sieve_level));
            if (sieve_format == "json") {
                std::cout << sieve_to_json(report).dump(2) << "\n";
            } else {
                std::cout << render_sieve_text(report);
            }
            return 0;
        }

        if (*oracle_cmd) {
            const StableGraph graph = parse_graph_auto(slurp(oracle_graph_path));
            const Level level(oracle_level);
            if (oracle_samples < 1) {
                throw DomainError("oracle: --samples must be positive");
            }
            std::mt19937 rng(412741u);
            int agree = 0;
            for (int i = 0; i < oracle_samples; ++i) {
                OneCochain sample;
                sample.values.reserve(graph.edges().size());
                for (std::size_t e = 0; e < graph.edges().size(); ++e) {
                    sample.values.push_back(static_cast<Residue>(
                        rng() % static_cast<std::uint32_t>(level.modulus())));
                }
                if (in_im_coboundary(graph, level, sample) ==
                    in_im_coboundary_oracle(graph, level, sample)) {
                    ++agree;
                }
            }
            std::cout << "oracle agreement: " << agree << "/" << oracle_samples << " samples\n";
            return agree == oracle_samples ? 0 : 1;
        }

        if (*verify_cmd) {
            const VerifyReport report = run_verification_battery(verify_workers);
            if (verify_format == "json") {
                std::cout << verify_report_json(report);
            } else {
                std::cout << render_verify_text(report);
            }
            return report.all_passed ? 0 : 1;
        }
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const GraphParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CompatibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    return 0;
}

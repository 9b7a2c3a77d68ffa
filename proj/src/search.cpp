#include "levelghost/search.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "levelghost/errors.hpp"

namespace levelghost {

namespace {

// l^exp with an explicit refusal once the count passes `cap`.
std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t cap, const char* what) {
    std::uint64_t acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (acc > cap / base) {
            throw CapExceededError(std::string(what) + " would exceed the cap of " +
                                   std::to_string(cap) + " elements");
        }
        acc *= base;
    }
    return acc;
}

// Fundamental circuits translated to edge positions with signs, so the hot
// loop never touches edge ids.
std::vector<std::vector<std::pair<int, int>>> circuit_positions(const StableGraph& graph) {
    std::unordered_map<int, int> position;
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        position.emplace(graph.edges()[i].id, static_cast<int>(i));
    }
    std::vector<std::vector<std::pair<int, int>>> out;
    out.reserve(graph.fundamental_circuits().size());
    for (const Circuit& circuit : graph.fundamental_circuits()) {
        std::vector<std::pair<int, int>> steps;
        steps.reserve(circuit.steps.size());
        for (const CircuitStep& step : circuit.steps) {
            steps.emplace_back(position.at(step.edge_id), step.forward ? 1 : -1);
        }
        out.push_back(std::move(steps));
    }
    return out;
}

// Depth-first enumeration of twist vectors for a fixed multiplicity: edge e
// draws from the multiples of gcd(M(e), l), in ascending order, with the
// total kept below l.  The suffix minima make the sum prune exact: once the
// mandatory remainder no longer fits, the whole subtree is dead.  A
// multiplicity-0 edge has gcd l, so under Full policy its value loop is
// empty and the multiplicity is skipped without a special case.
template <typename Fn>
void for_each_twist_vector(const StableGraph& graph, Level level, const OneCochain& multiplicity,
                           SupportPolicy policy, Fn&& fn) {
    const std::size_t edge_count = graph.edges().size();
    const std::int64_t l = level.modulus();

    std::vector<std::int64_t> step(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
        step[i] = gcd_with_level(multiplicity.values[i], level);
    }
    std::vector<std::int64_t> suffix_min(edge_count + 1, 0);
    for (std::size_t i = edge_count; i-- > 0;) {
        suffix_min[i] = suffix_min[i + 1] + (policy == SupportPolicy::Full ? step[i] : 0);
    }

    std::vector<Residue> values(edge_count, 0);
    const auto descend = [&](const auto& self, std::size_t pos, std::int64_t partial) -> void {
        if (pos == edge_count) {
            fn(static_cast<const std::vector<Residue>&>(values));
            return;
        }
        const std::int64_t first = policy == SupportPolicy::Full ? step[pos] : 0;
        for (std::int64_t v = first; v < l; v += step[pos]) {
            if (partial + v + suffix_min[pos + 1] >= l) {
                break; // values only grow from here
            }
            values[pos] = v;
            self(self, pos + 1, partial + v);
        }
    };
    descend(descend, 0, 0);
}

// One enumerated hit, light enough to sort and merge across workers.
struct Hit {
    std::uint64_t ordinal;      // kernel ordinal of M
    std::uint64_t twist_index;  // candidate counter within that ordinal
    OneCochain multiplicity;
    OneCochain twist;
};

bool hit_order(const Hit& a, const Hit& b) {
    return std::tie(a.ordinal, a.twist_index) < std::tie(b.ordinal, b.twist_index);
}

// Symmetry key for witnesses on two-vertex parallel-edge graphs: the
// multiset of (M, a) pairs with M read from the lower vertex to the higher
// one, minimised over the vertex swap when the genera agree.
struct SymmetryKey {
    std::vector<std::pair<Residue, Residue>> pairs;

    friend bool operator<(const SymmetryKey& a, const SymmetryKey& b) { return a.pairs < b.pairs; }
};

bool two_vertex_parallel(const StableGraph& graph) {
    if (graph.vertices().size() != 2) {
        return false;
    }
    for (const Edge& e : graph.edges()) {
        if (e.tail == e.head) {
            return false;
        }
    }
    return true;
}

SymmetryKey symmetry_key(const StableGraph& graph, Level level, const OneCochain& m,
                         const OneCochain& a) {
    const int lo = graph.vertices()[0].id;
    std::vector<std::pair<Residue, Residue>> oriented;
    oriented.reserve(graph.edges().size());
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        const Residue mv = graph.edges()[i].tail == lo ? m.values[i] : canon(-m.values[i], level);
        oriented.emplace_back(mv, a.values[i]);
    }
    std::sort(oriented.begin(), oriented.end());
    if (graph.vertices()[0].genus == graph.vertices()[1].genus) {
        std::vector<std::pair<Residue, Residue>> swapped;
        swapped.reserve(oriented.size());
        for (const auto& [mv, av] : oriented) {
            swapped.emplace_back(canon(-mv, level), av);
        }
        std::sort(swapped.begin(), swapped.end());
        if (swapped < oriented) {
            return SymmetryKey{std::move(swapped)};
        }
    }
    return SymmetryKey{std::move(oriented)};
}

int resolve_workers(int requested) {
    if (requested > 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

} // namespace

KernelStream::KernelStream(const StableGraph& graph, Level level, std::uint64_t cap)
    : level_(level), edge_count_(graph.edges().size()) {
    std::unordered_map<int, int> position;
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        position.emplace(graph.edges()[i].id, static_cast<int>(i));
    }
    for (const Circuit& circuit : graph.fundamental_circuits()) {
        std::vector<std::pair<int, int>> indicator;
        indicator.reserve(circuit.steps.size());
        for (const CircuitStep& step : circuit.steps) {
            indicator.emplace_back(position.at(step.edge_id), step.forward ? 1 : -1);
        }
        indicators_.push_back(std::move(indicator));
    }

    const int b1 = static_cast<int>(indicators_.size());
    size_ = checked_power(static_cast<std::uint64_t>(level.modulus()), b1, cap,
                          "the cycle space");
    place_value_.assign(indicators_.size(), 1);
    for (int i = b1 - 2; i >= 0; --i) {
        place_value_[static_cast<std::size_t>(i)] =
            place_value_[static_cast<std::size_t>(i + 1)] *
            static_cast<std::uint64_t>(level.modulus());
    }
}

OneCochain KernelStream::at(std::uint64_t ordinal) const {
    if (ordinal >= size_) {
        throw DomainError("kernel ordinal " + std::to_string(ordinal) + " out of range (size " +
                          std::to_string(size_) + ")");
    }
    std::vector<std::int64_t> acc(edge_count_, 0);
    for (std::size_t i = 0; i < indicators_.size(); ++i) {
        const std::int64_t digit =
            static_cast<std::int64_t>((ordinal / place_value_[i]) %
                                      static_cast<std::uint64_t>(level_.modulus()));
        for (const auto& [pos, sign] : indicators_[i]) {
            acc[static_cast<std::size_t>(pos)] += sign * digit;
        }
    }
    OneCochain out;
    out.values.reserve(edge_count_);
    for (std::int64_t v : acc) {
        out.values.push_back(canon(v, level_));
    }
    return out;
}

std::vector<OneCochain> enumerate_multiplicities(const StableGraph& graph, Level level,
                                                 std::uint64_t cap) {
    const KernelStream stream(graph, level, cap);
    std::vector<OneCochain> out;
    out.reserve(static_cast<std::size_t>(stream.size()));
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        out.push_back(stream.at(i));
    }
    return out;
}

std::vector<OneCochain> enumerate_twists(const StableGraph& graph, Level level,
                                         const OneCochain& multiplicity, SupportPolicy policy) {
    if (multiplicity.values.size() != graph.edges().size()) {
        throw DomainError("multiplicity must have one value per edge");
    }
    std::vector<OneCochain> out;
    for_each_twist_vector(graph, level, multiplicity, policy,
                          [&](const std::vector<Residue>& values) {
                              out.push_back(OneCochain{values});
                          });
    return out;
}

SearchResult search_graph(const StableGraph& graph, Level level, const SearchConfig& config) {
    if (!validate_stable(graph)) {
        throw DomainError("search_graph requires a stable graph");
    }

    const KernelStream kernel(graph, level, config.max_kernel_cochains);
    const auto circuits = circuit_positions(graph);
    const std::int64_t l = level.modulus();
    const std::size_t edge_count = graph.edges().size();

    // A candidate twist passes here only if the acted cochain a (.) M sums to
    // zero around every fundamental circuit and the twist is not identically
    // zero.  Everything that passes is re-verified through the full decision
    // procedure afterwards, so this fast path cannot manufacture witnesses.
    const auto scan_ordinal = [&](std::uint64_t ordinal, std::vector<Hit>& hits,
                                  std::uint64_t& candidates) {
        const OneCochain m = kernel.at(ordinal);
        std::vector<std::int64_t> acted(edge_count);
        std::uint64_t twist_index = 0;
        for_each_twist_vector(
            graph, level, m, config.support_policy, [&](const std::vector<Residue>& a) {
                const std::uint64_t index = twist_index++;
                ++candidates;
                std::int64_t twist_total = 0;
                for (std::size_t i = 0; i < edge_count; ++i) {
                    const std::int64_t d = gcd_with_level(m.values[i], level);
                    acted[i] = ((a[i] / d) * m.values[i]) % l;
                    twist_total += a[i];
                }
                if (twist_total == 0) {
                    return; // the zero twist is never junior
                }
                for (const auto& circuit : circuits) {
                    std::int64_t sum = 0;
                    for (const auto& [pos, sign] : circuit) {
                        sum += sign * acted[static_cast<std::size_t>(pos)];
                    }
                    if (canon(sum, level) != 0) {
                        return;
                    }
                }
                hits.push_back(Hit{ordinal, index, m, OneCochain{a}});
            });
    };

    const int workers = resolve_workers(config.workers);
    constexpr std::uint64_t kChunk = 512;

    std::vector<Hit> found;
    std::uint64_t candidates_total = 0;
    std::uint64_t processed = 0;
    bool stopped_early = false;

    for (std::uint64_t begin = 0; begin < kernel.size() && !stopped_early; begin += kChunk) {
        const std::uint64_t end = std::min(kernel.size(), begin + kChunk);

        std::vector<std::vector<Hit>> worker_hits(static_cast<std::size_t>(workers));
        std::vector<std::uint64_t> worker_candidates(static_cast<std::size_t>(workers), 0);
        std::vector<std::exception_ptr> worker_errors(static_cast<std::size_t>(workers));

        const auto run_worker = [&](int w) {
            try {
                for (std::uint64_t ordinal = begin + static_cast<std::uint64_t>(w); ordinal < end;
                     ordinal += static_cast<std::uint64_t>(workers)) {
                    scan_ordinal(ordinal, worker_hits[static_cast<std::size_t>(w)],
                                 worker_candidates[static_cast<std::size_t>(w)]);
                }
            } catch (...) {
                worker_errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        };

        if (workers == 1) {
            run_worker(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back(run_worker, w);
            }
            for (std::thread& t : pool) {
                t.join();
            }
        }
        for (const std::exception_ptr& err : worker_errors) {
            if (err) {
                std::rethrow_exception(err);
            }
        }

        std::vector<Hit> chunk;
        for (int w = 0; w < workers; ++w) {
            auto& h = worker_hits[static_cast<std::size_t>(w)];
            candidates_total += worker_candidates[static_cast<std::size_t>(w)];
            chunk.insert(chunk.end(), std::make_move_iterator(h.begin()),
                         std::make_move_iterator(h.end()));
        }
        std::sort(chunk.begin(), chunk.end(), hit_order);
        found.insert(found.end(), std::make_move_iterator(chunk.begin()),
                     std::make_move_iterator(chunk.end()));
        processed = end;

        if (config.max_candidates != 0 && candidates_total > config.max_candidates) {
            throw CapExceededError("search exceeded the candidate cap of " +
                                   std::to_string(config.max_candidates) + " after " +
                                   std::to_string(processed) + " kernel cochains");
        }
        if (config.stop_at_first && !found.empty()) {
            stopped_early = true;
        }
    }

    if (config.stop_at_first && found.size() > 1) {
        found.resize(1);
    }
    if (config.dedupe_by_symmetry && two_vertex_parallel(graph)) {
        std::set<std::vector<std::pair<Residue, Residue>>> seen;
        std::vector<Hit> kept;
        for (Hit& hit : found) {
            SymmetryKey key = symmetry_key(graph, level, hit.multiplicity, hit.twist);
            if (seen.insert(std::move(key.pairs)).second) {
                kept.push_back(std::move(hit));
            }
        }
        found = std::move(kept);
    }

    SearchResult result;
    result.kernel_cochains = kernel.size();
    result.candidates = candidates_total;
    result.complete = processed == kernel.size();
    result.witnesses.reserve(found.size());
    for (const Hit& hit : found) {
        auto outcome = check_junior_ghost(graph, level, hit.multiplicity, hit.twist,
                                          config.support_policy);
        auto* witness = std::get_if<GhostWitness>(&outcome);
        if (witness == nullptr) {
            throw InternalConsistencyError(
                "search_graph produced a candidate that failed re-verification");
        }
        result.witnesses.push_back(std::move(*witness));
    }
    return result;
}

std::vector<StableGraph> all_stable_graphs(int edge_count, int genus_cap) {
    if (edge_count < 1) {
        throw DomainError("edge count must be at least 1, got " + std::to_string(edge_count));
    }
    if (genus_cap < 0) {
        throw DomainError("genus cap must be non-negative, got " + std::to_string(genus_cap));
    }

    using EdgeList = std::vector<std::pair<int, int>>;
    using CanonKey = std::tuple<int, EdgeList, std::vector<int>>;

    std::vector<StableGraph> out;
    std::set<CanonKey> seen;

    // A connected graph with e edges spans at most e+1 vertices.
    for (int nv = 1; nv <= edge_count + 1; ++nv) {
        EdgeList slots;
        for (int i = 0; i < nv; ++i) {
            for (int j = i; j < nv; ++j) {
                slots.emplace_back(i, j);
            }
        }

        // Multisets of edge slots: non-decreasing index vectors.
        std::vector<int> pick(static_cast<std::size_t>(edge_count), 0);
        for (;;) {
            EdgeList edges;
            edges.reserve(pick.size());
            for (int s : pick) {
                edges.push_back(slots[static_cast<std::size_t>(s)]);
            }

            // Connectivity over all nv vertices.
            std::vector<int> component(static_cast<std::size_t>(nv));
            for (int v = 0; v < nv; ++v) {
                component[static_cast<std::size_t>(v)] = v;
            }
            const auto root = [&](int v) {
                while (component[static_cast<std::size_t>(v)] != v) {
                    v = component[static_cast<std::size_t>(v)];
                }
                return v;
            };
            for (const auto& [i, j] : edges) {
                component[static_cast<std::size_t>(root(i))] = root(j);
            }
            bool connected = true;
            for (int v = 1; v < nv && connected; ++v) {
                connected = root(v) == root(0);
            }

            if (connected) {
                std::vector<int> valence(static_cast<std::size_t>(nv), 0);
                for (const auto& [i, j] : edges) {
                    ++valence[static_cast<std::size_t>(i)];
                    ++valence[static_cast<std::size_t>(j)];
                }

                // Genus assignments under the cap, filtered by stability.
                std::vector<int> genus(static_cast<std::size_t>(nv), 0);
                for (;;) {
                    bool stable = true;
                    for (int v = 0; v < nv && stable; ++v) {
                        stable = 2 * genus[static_cast<std::size_t>(v)] - 2 +
                                     valence[static_cast<std::size_t>(v)] >
                                 0;
                    }
                    if (stable) {
                        // Canonical form: minimise over vertex relabellings.
                        std::vector<int> perm(static_cast<std::size_t>(nv));
                        for (int v = 0; v < nv; ++v) {
                            perm[static_cast<std::size_t>(v)] = v;
                        }
                        std::optional<CanonKey> best;
                        do {
                            EdgeList relabelled;
                            relabelled.reserve(edges.size());
                            for (const auto& [i, j] : edges) {
                                const int pi = perm[static_cast<std::size_t>(i)];
                                const int pj = perm[static_cast<std::size_t>(j)];
                                relabelled.emplace_back(std::min(pi, pj), std::max(pi, pj));
                            }
                            std::sort(relabelled.begin(), relabelled.end());
                            std::vector<int> regenus(static_cast<std::size_t>(nv));
                            for (int v = 0; v < nv; ++v) {
                                regenus[static_cast<std::size_t>(perm[static_cast<std::size_t>(
                                    v)])] = genus[static_cast<std::size_t>(v)];
                            }
                            CanonKey key{nv, std::move(relabelled), std::move(regenus)};
                            if (!best || key < *best) {
                                best = std::move(key);
                            }
                        } while (std::next_permutation(perm.begin(), perm.end()));

                        if (seen.insert(*best).second) {
                            std::vector<Vertex> vertices;
                            vertices.reserve(static_cast<std::size_t>(nv));
                            const auto& [n, canon_edges, canon_genus] = *best;
                            for (int v = 0; v < n; ++v) {
                                vertices.push_back({v, canon_genus[static_cast<std::size_t>(v)]});
                            }
                            std::vector<Edge> graph_edges;
                            graph_edges.reserve(canon_edges.size());
                            for (std::size_t i = 0; i < canon_edges.size(); ++i) {
                                graph_edges.push_back({static_cast<int>(i) + 1,
                                                       canon_edges[i].first,
                                                       canon_edges[i].second});
                            }
                            out.emplace_back(std::move(vertices), std::move(graph_edges));
                        }
                    }

                    // Next genus tuple, most significant digit first.
                    std::size_t pos = genus.size();
                    while (pos-- > 0) {
                        if (++genus[pos] <= genus_cap) {
                            break;
                        }
                        genus[pos] = 0;
                        if (pos == 0) {
                            pos = genus.size(); // signal exhaustion
                            break;
                        }
                    }
                    if (pos == genus.size()) {
                        break;
                    }
                }
            }

            // Next non-decreasing slot multiset.
            std::size_t pos = pick.size();
            bool advanced = false;
            while (pos-- > 0) {
                if (pick[pos] + 1 < static_cast<int>(slots.size())) {
                    const int next = pick[pos] + 1;
                    for (std::size_t i = pos; i < pick.size(); ++i) {
                        pick[i] = next;
                    }
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                break;
            }
        }
    }
    return out;
}

ClassificationResult classify_level(Level level, int max_edges, const ClassifyConfig& config) {
    if (max_edges < 1) {
        throw DomainError("max_edges must be at least 1, got " + std::to_string(max_edges));
    }

    ClassificationResult result;
    result.level = level.modulus();

    for (int e = 1; e <= max_edges; ++e) {
        EdgeClassification entry;
        entry.edge_count = e;

        std::vector<StableGraph> graphs;
        if (config.family == GraphFamily::Banana) {
            graphs.push_back(banana_graph(e));
        } else {
            graphs = all_stable_graphs(e, config.genus_cap);
        }

        SearchConfig search_config = config.search;
        search_config.stop_at_first = true;

        try {
            entry.outcome = EdgeOutcome::None;
            for (const StableGraph& graph : graphs) {
                ++entry.graphs_searched;
                SearchResult found = search_graph(graph, level, search_config);
                if (!found.witnesses.empty()) {
                    entry.outcome = EdgeOutcome::WitnessFound;
                    entry.witness = std::move(found.witnesses.front());
                    break;
                }
            }
        } catch (const CapExceededError&) {
            entry.outcome = EdgeOutcome::Unresolved;
            entry.witness.reset();
        }
        result.per_edge.push_back(std::move(entry));
    }

    result.outcome = MinimalOutcome::NoneUpToBound;
    for (const EdgeClassification& entry : result.per_edge) {
        if (entry.outcome == EdgeOutcome::WitnessFound) {
            result.outcome = MinimalOutcome::Found;
            result.minimal_codimension = entry.edge_count;
            break;
        }
        if (entry.outcome == EdgeOutcome::Unresolved) {
            result.outcome = MinimalOutcome::Unresolved;
            break;
        }
    }
    return result;
}

} // namespace levelghost

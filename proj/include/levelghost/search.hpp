#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "levelghost/criterion.hpp"

namespace levelghost {

struct SearchConfig {
    SupportPolicy support_policy = SupportPolicy::Full;
    // Stop once a witness is known (at chunk granularity; the reported
    // witness is still the enumeration-order first one).
    bool stop_at_first = false;
    // Collapse witnesses that differ only by a symmetry of a two-vertex
    // parallel-edge graph (edge permutations and the vertex swap).  Applied
    // after the search, so exhaustiveness is unaffected.  Ignored on graphs
    // without that shape.
    bool dedupe_by_symmetry = false;
    // 0 = pick from hardware concurrency.  Output bytes never depend on it.
    int workers = 0;
    // Refuse to enumerate a cycle space larger than this (l^b1 elements).
    std::uint64_t max_kernel_cochains = 1'000'000;
    // Refuse to examine more twist candidates than this; 0 = unlimited.
    std::uint64_t max_candidates = 0;
};

struct SearchResult {
    std::vector<GhostWitness> witnesses; // enumeration order; see search_graph
    std::uint64_t kernel_cochains = 0;   // size of the cycle space, l^b1
    std::uint64_t candidates = 0;        // twist vectors that reached the circuit test
    bool complete = false;               // true iff the whole space was enumerated
};

// Random access into Ker(boundary).  Ordinal o, written in base l with b1
// digits c_0..c_{b1-1} (c_0 most significant), selects the cochain
// sum_i c_i * K_i where K_i is the signed indicator of fundamental circuit i.
// Every kernel element appears exactly once: the i-th non-tree edge belongs
// to exactly one circuit, with coefficient +1, so the digits can be read
// back off the non-tree edges.  Ordinal order is lexicographic in (c_i).
class KernelStream {
public:
    KernelStream(const StableGraph& graph, Level level, std::uint64_t cap);

    std::uint64_t size() const { return size_; }
    OneCochain at(std::uint64_t ordinal) const;

private:
    Level level_;
    std::size_t edge_count_;
    // Signed circuit indicators: per circuit, (edge position, +1/-1) pairs.
    std::vector<std::vector<std::pair<int, int>>> indicators_;
    std::vector<std::uint64_t> place_value_; // l^(b1-1-i) for digit i
    std::uint64_t size_;
};

// All kernel elements in ordinal order; refuses via CapExceededError if
// there are more than `cap`.
std::vector<OneCochain> enumerate_multiplicities(const StableGraph& graph, Level level,
                                                 std::uint64_t cap = 1'000'000);

// Every twist vector drawing each edge value from the multiples of
// gcd(M(e), l), with total sum < l (sound for juniority because values are
// canonical), Full policy excluding zero values.  Lexicographic in the
// per-edge values, edge input order.
std::vector<OneCochain> enumerate_twists(const StableGraph& graph, Level level,
                                         const OneCochain& multiplicity, SupportPolicy policy);

// Exhaustive search over Ker(boundary) x twists.  Witnesses come out in
// enumeration order (kernel ordinal, then twist order) regardless of the
// worker count; every reported witness has been re-verified through
// check_junior_ghost.  An empty, complete result certifies non-existence
// under the configured policy.  Cap violations throw CapExceededError
// before any conclusion is drawn.
SearchResult search_graph(const StableGraph& graph, Level level, const SearchConfig& config = {});

enum class GraphFamily {
    Banana,    // the single k-edge two-vertex graph at each edge count
    AllStable, // every connected stable multigraph at each edge count
};

struct ClassifyConfig {
    GraphFamily family = GraphFamily::Banana;
    int genus_cap = 2; // per-vertex bound for AllStable generation
    SearchConfig search;
};

enum class EdgeOutcome {
    None,         // exhaustively refuted
    WitnessFound,
    Unresolved,   // an enumeration cap was hit; never reported as None
};

struct EdgeClassification {
    int edge_count = 0;
    EdgeOutcome outcome = EdgeOutcome::None;
    std::optional<GhostWitness> witness;
    std::uint64_t graphs_searched = 0;
};

enum class MinimalOutcome {
    Found,
    NoneUpToBound,
    Unresolved,
};

struct ClassificationResult {
    std::int64_t level = 0;
    std::vector<EdgeClassification> per_edge;
    MinimalOutcome outcome = MinimalOutcome::NoneUpToBound;
    int minimal_codimension = 0; // meaningful only when outcome == Found
};

// For each edge count e in [1, max_edges], search the configured family and
// record the outcome; the minimal codimension is the least e carrying a
// witness.  An Unresolved edge count below the first witness makes the whole
// classification Unresolved.
ClassificationResult classify_level(Level level, int max_edges, const ClassifyConfig& config = {});

// Every connected stable multigraph with exactly `edge_count` edges and all
// genera at most `genus_cap`, one representative per isomorphism class, in a
// deterministic order.  Vertices are labelled 0..n-1 and edges 1..e on the
// canonical form.
std::vector<StableGraph> all_stable_graphs(int edge_count, int genus_cap);

} // namespace levelghost

#pragma once

#include <vector>

namespace levelghost {

struct Vertex {
    int id;
    int genus;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Reference orientation tail -> head.  All per-edge values (multiplicities)
// are stored on this orientation; reading an edge backwards negates them.
struct Edge {
    int id;
    int tail;
    int head;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// One traversal step of a circuit: edge crossed tail->head (forward) or
// head->tail (backward).
struct CircuitStep {
    int edge_id;
    bool forward;

    friend bool operator==(const CircuitStep&, const CircuitStep&) = default;
};

struct Circuit {
    std::vector<CircuitStep> steps;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

// A connected multigraph with genus-decorated vertices.  Loops and parallel
// edges are allowed.  Construction validates the structure (unique ids,
// known endpoints, non-negative genus, connectivity) and throws
// StructuralError on violation; stability is a separate predicate so that
// callers can report it distinctly (see validate_stable).
//
// The spanning tree and its fundamental circuits are fixed at construction
// and fully determined by the input order of vertices and edges:
//   - depth-first from the vertex with the smallest id, trying edges in
//     input order, gives the tree;
//   - every non-tree edge e, in input order, contributes one circuit: e
//     crossed forward, then the tree path from head(e) back to tail(e).
// A loop is its own one-step circuit.
class StableGraph {
public:
    StableGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Positional index of an id; throws StructuralError if unknown.
    int vertex_index(int id) const;
    int edge_index(int id) const;

    // Endpoint degree with loops counting twice.
    int valence(int vertex_idx) const { return valence_[static_cast<std::size_t>(vertex_idx)]; }

    // |E| - |V| + 1; well defined because the graph is connected.
    int first_betti() const;

    // Sum of vertex genera plus the first Betti number.
    int total_genus() const;

    // Edge ids of the deterministic spanning tree, in discovery order.
    const std::vector<int>& spanning_tree() const { return tree_edges_; }

    // One circuit per non-tree edge, in edge input order.
    const std::vector<Circuit>& fundamental_circuits() const { return circuits_; }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> valence_;
    std::vector<int> tree_edges_;
    std::vector<Circuit> circuits_;
};

// The stability inequality 2*g - 2 + valence > 0 at every vertex (a loop
// contributes 2 to the valence of its vertex).
bool validate_stable(const StableGraph& graph);

// Two vertices joined by k parallel edges, ids 1..k.  Edges run 0 -> 1
// except edge 2, which runs 1 -> 0 so that the standard circuit reads as a
// sum rather than a difference.  k >= 3 is stable with genus 0 on both
// vertices; k <= 2 needs genus 1.
StableGraph banana_graph(int k);

// banana_graph(3): the three-edge two-vertex graph used throughout.
StableGraph theta_graph();

} // namespace levelghost

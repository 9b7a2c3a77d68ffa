#include "levelghost/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>

#include "levelghost/errors.hpp"

namespace levelghost {

namespace {

// Adjacency entry: (edge index, neighbour vertex index), in edge input order.
using Adjacency = std::vector<std::vector<std::pair<int, int>>>;

Adjacency build_adjacency(const std::vector<Edge>& edges,
                          const std::unordered_map<int, int>& vertex_index,
                          std::size_t vertex_count) {
    Adjacency adj(vertex_count);
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
        const int t = vertex_index.at(edges[ei].tail);
        const int h = vertex_index.at(edges[ei].head);
        adj[static_cast<std::size_t>(t)].emplace_back(static_cast<int>(ei), h);
        if (t != h) {
            adj[static_cast<std::size_t>(h)].emplace_back(static_cast<int>(ei), t);
        }
    }
    return adj;
}

} // namespace

StableGraph::StableGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.empty()) {
        throw StructuralError("a graph needs at least one vertex");
    }

    std::unordered_map<int, int> vidx;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vidx.emplace(vertices_[i].id, static_cast<int>(i)).second) {
            throw StructuralError("duplicate vertex id " + std::to_string(vertices_[i].id));
        }
        if (vertices_[i].genus < 0) {
            throw StructuralError("vertex " + std::to_string(vertices_[i].id) +
                                  " has negative genus " + std::to_string(vertices_[i].genus));
        }
    }

    std::unordered_map<int, int> eidx;
    valence_.assign(vertices_.size(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!eidx.emplace(e.id, static_cast<int>(i)).second) {
            throw StructuralError("duplicate edge id " + std::to_string(e.id));
        }
        for (int endpoint : {e.tail, e.head}) {
            auto it = vidx.find(endpoint);
            if (it == vidx.end()) {
                throw StructuralError("edge " + std::to_string(e.id) +
                                      " references unknown vertex " + std::to_string(endpoint));
            }
            ++valence_[static_cast<std::size_t>(it->second)];
        }
    }

    const Adjacency adj = build_adjacency(edges_, vidx, vertices_.size());

    // Depth-first search from the smallest vertex id, taking edges in input
    // order.  The explicit cursor stack reproduces the recursive visit order
    // exactly while staying safe for deep graphs.
    int start = 0;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (vertices_[i].id < vertices_[static_cast<std::size_t>(start)].id) {
            start = static_cast<int>(i);
        }
    }

    std::vector<char> visited(vertices_.size(), 0);
    std::vector<std::size_t> cursor(vertices_.size(), 0);
    // parent[v] = (edge index, parent vertex index) on the tree path to the root.
    std::vector<std::pair<int, int>> parent(vertices_.size(), {-1, -1});
    std::vector<int> depth(vertices_.size(), 0);
    std::vector<char> in_tree(edges_.size(), 0);

    std::vector<int> stack{start};
    visited[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        auto& pos = cursor[static_cast<std::size_t>(v)];
        const auto& out = adj[static_cast<std::size_t>(v)];
        bool descended = false;
        while (pos < out.size()) {
            const auto [ei, u] = out[pos];
            ++pos;
            if (!visited[static_cast<std::size_t>(u)]) {
                visited[static_cast<std::size_t>(u)] = 1;
                in_tree[static_cast<std::size_t>(ei)] = 1;
                parent[static_cast<std::size_t>(u)] = {ei, v};
                depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
                tree_edges_.push_back(edges_[static_cast<std::size_t>(ei)].id);
                stack.push_back(u);
                descended = true;
                break;
            }
        }
        if (!descended) {
            stack.pop_back();
        }
    }

    if (std::find(visited.begin(), visited.end(), 0) != visited.end()) {
        throw StructuralError("graph is not connected");
    }

    // One fundamental circuit per non-tree edge: the edge forward, then the
    // tree path head -> tail, assembled by climbing both endpoints to their
    // lowest common ancestor.
    auto direction = [&](int edge_index, int from) {
        return vidx.at(edges_[static_cast<std::size_t>(edge_index)].tail) == from;
    };
    for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
        if (in_tree[ei]) {
            continue;
        }
        const Edge& e = edges_[ei];
        Circuit circuit;
        circuit.steps.push_back({e.id, true});

        int a = vidx.at(e.head);
        int b = vidx.at(e.tail);
        std::vector<CircuitStep> descent; // collected tail-side, to be reversed
        while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            const auto [pe, pv] = parent[static_cast<std::size_t>(a)];
            circuit.steps.push_back({edges_[static_cast<std::size_t>(pe)].id, direction(pe, a)});
            a = pv;
        }
        while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            const auto [pe, pv] = parent[static_cast<std::size_t>(b)];
            descent.push_back({edges_[static_cast<std::size_t>(pe)].id, direction(pe, pv)});
            b = pv;
        }
        while (a != b) {
            const auto [ae, av] = parent[static_cast<std::size_t>(a)];
            circuit.steps.push_back({edges_[static_cast<std::size_t>(ae)].id, direction(ae, a)});
            a = av;
            const auto [be, bv] = parent[static_cast<std::size_t>(b)];
            descent.push_back({edges_[static_cast<std::size_t>(be)].id, direction(be, bv)});
            b = bv;
        }
        circuit.steps.insert(circuit.steps.end(), descent.rbegin(), descent.rend());
        circuits_.push_back(std::move(circuit));
    }
}

int StableGraph::vertex_index(int id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].id == id) {
            return static_cast<int>(i);
        }
    }
    throw StructuralError("unknown vertex id " + std::to_string(id));
}

int StableGraph::edge_index(int id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id == id) {
            return static_cast<int>(i);
        }
    }
    throw StructuralError("unknown edge id " + std::to_string(id));
}

int StableGraph::first_betti() const {
    return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + 1;
}

int StableGraph::total_genus() const {
    int g = first_betti();
    for (const Vertex& v : vertices_) {
        g += v.genus;
    }
    return g;
}

bool validate_stable(const StableGraph& graph) {
    const auto& vs = graph.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (2 * vs[i].genus - 2 + graph.valence(static_cast<int>(i)) <= 0) {
            return false;
        }
    }
    return true;
}

StableGraph banana_graph(int k) {
    if (k < 1) {
        throw DomainError("a banana graph needs at least one edge, got " + std::to_string(k));
    }
    const int genus = k >= 3 ? 0 : 1;
    std::vector<Vertex> vertices{{0, genus}, {1, genus}};
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        if (i == 2) {
            edges.push_back({i, 1, 0});
        } else {
            edges.push_back({i, 0, 1});
        }
    }
    return StableGraph(std::move(vertices), std::move(edges));
}

StableGraph theta_graph() {
    return banana_graph(3);
}

} // namespace levelghost

#include "levelghost/cochain.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "levelghost/errors.hpp"

namespace levelghost {

namespace {

void require_edge_sized(const StableGraph& graph, const OneCochain& f) {
    if (f.values.size() != graph.edges().size()) {
        throw DomainError("one-cochain has " + std::to_string(f.values.size()) +
                          " values for a graph with " + std::to_string(graph.edges().size()) +
                          " edges");
    }
}

void require_vertex_sized(const StableGraph& graph, const ZeroCochain& f) {
    if (f.values.size() != graph.vertices().size()) {
        throw DomainError("zero-cochain has " + std::to_string(f.values.size()) +
                          " values for a graph with " + std::to_string(graph.vertices().size()) +
                          " vertices");
    }
}

} // namespace

ZeroCochain boundary(const StableGraph& graph, Level level, const OneCochain& f) {
    require_edge_sized(graph, f);
    std::vector<std::int64_t> acc(graph.vertices().size(), 0);
    const auto& edges = graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].tail == edges[i].head) {
            continue; // a loop contributes +v and -v to the same vertex
        }
        const Residue v = canon(f.values[i], level);
        acc[static_cast<std::size_t>(graph.vertex_index(edges[i].head))] += v;
        acc[static_cast<std::size_t>(graph.vertex_index(edges[i].tail))] -= v;
    }
    ZeroCochain out;
    out.values.reserve(acc.size());
    for (std::int64_t v : acc) {
        out.values.push_back(canon(v, level));
    }
    return out;
}

OneCochain coboundary(const StableGraph& graph, Level level, const ZeroCochain& f) {
    require_vertex_sized(graph, f);
    OneCochain out;
    out.values.reserve(graph.edges().size());
    for (const Edge& e : graph.edges()) {
        if (e.tail == e.head) {
            out.values.push_back(0);
            continue;
        }
        const Residue head = f.values[static_cast<std::size_t>(graph.vertex_index(e.head))];
        const Residue tail = f.values[static_cast<std::size_t>(graph.vertex_index(e.tail))];
        out.values.push_back(canon(head - tail, level));
    }
    return out;
}

Residue circuit_sum(const StableGraph& graph, Level level, const OneCochain& f,
                    const Circuit& circuit) {
    require_edge_sized(graph, f);
    std::int64_t acc = 0;
    for (const CircuitStep& step : circuit.steps) {
        const Residue v = canon(f.values[static_cast<std::size_t>(graph.edge_index(step.edge_id))],
                                level);
        acc += step.forward ? v : -v;
    }
    return canon(acc, level);
}

bool in_ker_boundary(const StableGraph& graph, Level level, const OneCochain& f) {
    const ZeroCochain b = boundary(graph, level, f);
    return std::all_of(b.values.begin(), b.values.end(), [](Residue v) { return v == 0; });
}

bool in_im_coboundary(const StableGraph& graph, Level level, const OneCochain& f) {
    require_edge_sized(graph, f);
    for (const Circuit& circuit : graph.fundamental_circuits()) {
        if (circuit_sum(graph, level, f, circuit) != 0) {
            return false;
        }
    }
    return true;
}

bool in_im_coboundary_oracle(const StableGraph& graph, Level level, const OneCochain& f,
                             std::uint64_t cap) {
    require_edge_sized(graph, f);
    const std::uint64_t l = static_cast<std::uint64_t>(level.modulus());
    const std::size_t free_vertices = graph.vertices().size() - 1;

    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free_vertices; ++i) {
        if (count > cap / l) {
            throw CapExceededError("coboundary oracle would enumerate more than " +
                                   std::to_string(cap) + " potentials (level " +
                                   std::to_string(l) + ", " +
                                   std::to_string(graph.vertices().size()) + " vertices)");
        }
        count *= l;
    }

    // Odometer over the potentials with vertex 0 pinned to 0.
    ZeroCochain potential;
    potential.values.assign(graph.vertices().size(), 0);
    OneCochain target;
    target.values.reserve(f.values.size());
    for (Residue v : f.values) {
        target.values.push_back(canon(v, level));
    }
    for (;;) {
        if (coboundary(graph, level, potential) == target) {
            return true;
        }
        std::size_t pos = 1;
        while (pos < potential.values.size()) {
            if (++potential.values[pos] < level.modulus()) {
                break;
            }
            potential.values[pos] = 0;
            ++pos;
        }
        if (pos == potential.values.size()) {
            return false;
        }
    }
}

} // namespace levelghost

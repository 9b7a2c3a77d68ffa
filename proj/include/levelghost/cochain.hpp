#pragma once

#include <cstdint>

#include "levelghost/graph.hpp"
#include "levelghost/residue.hpp"

namespace levelghost {

// Z/l values on vertices, in vertex input order.
struct ZeroCochain {
    std::vector<Residue> values;

    friend bool operator==(const ZeroCochain&, const ZeroCochain&) = default;
};

// Z/l values on edges, in edge input order, read on each edge's reference
// orientation (tail -> head).  Reading an edge backwards negates the value;
// the antisymmetry is implicit in how boundary/circuit sums consume it.
struct OneCochain {
    std::vector<Residue> values;

    friend bool operator==(const OneCochain&, const OneCochain&) = default;
};

// Boundary C^1 -> C^0: at each vertex, incoming values (head side) count
// positively and outgoing values (tail side) negatively.  A loop enters and
// leaves the same vertex, so it cancels to zero.
ZeroCochain boundary(const StableGraph& graph, Level level, const OneCochain& f);

// Coboundary C^0 -> C^1: head value minus tail value; zero on loops.
OneCochain coboundary(const StableGraph& graph, Level level, const ZeroCochain& f);

// Signed sum of a one-cochain along a circuit: forward steps add, backward
// steps subtract.
Residue circuit_sum(const StableGraph& graph, Level level, const OneCochain& f,
                    const Circuit& circuit);

// Membership in Ker(boundary) — the cycle space over Z/l.
bool in_ker_boundary(const StableGraph& graph, Level level, const OneCochain& f);

// Membership in Im(coboundary), decided through the fundamental circuits: a
// one-cochain is a coboundary exactly when it sums to zero along every
// fundamental circuit.  No modular linear algebra is involved.
bool in_im_coboundary(const StableGraph& graph, Level level, const OneCochain& f);

// Brute-force cross-check of in_im_coboundary: enumerates all l^(|V|-1)
// zero-cochains with the first vertex pinned to 0 (shifting a potential by a
// constant does not change its coboundary) and compares images.  Throws
// CapExceededError when the enumeration would exceed `cap`.
bool in_im_coboundary_oracle(const StableGraph& graph, Level level, const OneCochain& f,
                             std::uint64_t cap = 1'000'000);

} // namespace levelghost

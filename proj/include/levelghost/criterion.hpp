#pragma once

#include <variant>
#include <vector>

#include "levelghost/cochain.hpp"
#include "levelghost/graph.hpp"
#include "levelghost/residue.hpp"

namespace levelghost {

// Which edges a twist must act on.  Full demands a nonzero value on every
// edge; Any accepts partial support.
enum class SupportPolicy {
    Full,
    Any,
};

// Why a candidate pair (M, a) is not a junior ghost, reported for the first
// failing check in the fixed order below.
enum class RejectionReason {
    Incompatible,       // some edge has gcd(M(e), l) not dividing a(e)
    NotInKerBoundary,   // M is not a cycle: boundary(M) != 0
    NotInImCoboundary,  // a (.) M fails some fundamental circuit sum
    NotJunior,          // age is 0 or at least 1
    SupportViolation,   // Full policy and some edge carries a zero twist
};

struct GhostChecks {
    bool compatible;
    bool ker_boundary;
    bool im_coboundary;
    bool junior;

    friend bool operator==(const GhostChecks&, const GhostChecks&) = default;
};

// A verified junior ghost: the twist a acts on the multiplicity datum M over
// the given graph and level, all four checks hold, and the age is junior.
struct GhostWitness {
    StableGraph graph;
    Level level;
    OneCochain multiplicity; // M, on reference orientations
    OneCochain twist;        // a, orientation-free per-edge values
    AgeValue age;            // (sum of twist values) / l, unreduced
    std::vector<int> support;    // edge ids with a nonzero twist, ascending
    int codimension;             // number of edges of the graph
    GhostChecks checks;          // all true by construction
};

// Per-edge action of the twist on the multiplicity: (a (.) M)(e).  Throws
// CompatibilityError on the first incompatible edge.
OneCochain odot_cochain(const StableGraph& graph, Level level, const OneCochain& twist,
                        const OneCochain& multiplicity);

// Edge ids carrying a nonzero twist value, ascending.
std::vector<int> support(const StableGraph& graph, Level level, const OneCochain& twist);

// The decision procedure.  Checks run in a fixed order and the first failure
// wins: compatibility, M in Ker(boundary), a (.) M in Im(coboundary), age
// junior, support policy.  On success the returned witness has been built
// from re-computed quantities, not from caller-supplied claims.
//
// Precondition: validate_stable(graph); a non-stable graph is a domain error.
std::variant<GhostWitness, RejectionReason> check_junior_ghost(
    const StableGraph& graph, Level level, const OneCochain& multiplicity,
    const OneCochain& twist, SupportPolicy policy = SupportPolicy::Full);

} // namespace levelghost

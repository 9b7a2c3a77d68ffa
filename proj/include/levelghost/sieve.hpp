#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "levelghost/residue.hpp"

namespace levelghost {

// An unordered multiset {a1, a2, a3} of positive twist values with
// a1 + a2 + a3 < l, stored sorted ascending.
struct CandidateTriple {
    std::array<std::int64_t, 3> parts;

    friend bool operator==(const CandidateTriple&, const CandidateTriple&) = default;
    friend auto operator<=>(const CandidateTriple&, const CandidateTriple&) = default;
};

// All candidate multisets for a level l >= 4, in lexicographic order.
std::vector<CandidateTriple> enumerate_candidate_triples(Level level);

// One admissible assignment for a candidate triple on the three-edge
// two-vertex graph: an arrangement (a1, a2, a3) of the multiset (outer
// mirror images deduplicated by a1 <= a3) together with an all-nonzero
// multiplicity (m1, m2, m3) satisfying both circuit conditions
//   a1 (.) m1 == a3 (.) m3   and   a1 (.) m1 + a2 (.) m2 == 0 (mod l).
// Whether that multiplicity also lies in Ker(boundary) — m1 + m3 == m2 —
// is recorded separately: the sieve deliberately defers it.
struct SieveAdmissible {
    std::array<Residue, 3> twist;
    std::array<Residue, 3> multiplicity;
    bool in_kernel;

    friend bool operator==(const SieveAdmissible&, const SieveAdmissible&) = default;
};

struct SieveEntry {
    CandidateTriple triple;
    std::vector<SieveAdmissible> admissible; // empty = the triple is eliminated

    bool survives() const { return !admissible.empty(); }
};

struct SieveReport {
    std::int64_t level = 0;
    std::vector<SieveEntry> entries; // one per candidate triple, in order
    int survivor_count = 0;
    bool any_kernel_admissible = false;
};

// Admissible assignments for the given triples; arrangement-major, then
// lexicographic in (m1, m2, m3).
std::vector<SieveAdmissible> sieve_triple(Level level, const CandidateTriple& triple);

// The full narrative: every candidate triple with its admissible list.
SieveReport run_sieve(Level level);

} // namespace levelghost

#pragma once

#include <array>
#include <cstdint>

#include "levelghost/table.hpp"

namespace levelghost::golden {

// Independently tabulated multiplication grids for levels 6 and 12, kept as
// verbatim transcriptions: one row per twist value, '.' marking an
// incompatible cell.  The verification battery compares build_odot_table
// against these cell-for-cell.
extern const char* const kReferenceTable6;
extern const char* const kReferenceTable12;

// Parse one of the grids above into a table (tokens are '.' or a value).
OdotTable decode_reference_table(std::int64_t level, const char* grid);

// The externally tabulated list of 40 candidate multisets at level 12.  The
// complete enumeration yields 41; the battery checks that the one extra
// multiset is exactly {2,4,5} and that its verdict is computed, not assumed.
extern const std::array<std::array<std::int64_t, 3>, 40> kTabulatedMultisets40;

// The six multisets that survive the level-12 sieve.
extern const std::array<std::array<std::int64_t, 3>, 6> kSurvivorMultisets;

// Named admissible assignments the level-12 sieve must list: a twist
// arrangement together with one of its compatible all-nonzero
// multiplicities (twelve distinct multiplicity triples across the groups).
struct NamedAdmissible {
    std::array<std::int64_t, 3> twist;
    std::array<std::int64_t, 3> multiplicity;
};
extern const std::array<NamedAdmissible, 24> kNamedAdmissible;

// Expected minimal codimension per level for the banana family searched up
// to four edges; 0 means no witness up to that bound.
struct SweepExpectation {
    std::int64_t level;
    int minimal;
};
extern const std::array<SweepExpectation, 14> kClassificationSweep;

} // namespace levelghost::golden

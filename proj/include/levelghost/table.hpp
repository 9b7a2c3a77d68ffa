#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levelghost/residue.hpp"

namespace levelghost {

// The full multiplication grid of the twist action at one level: cell
// (row a, column m) holds a (.) m when the pair is compatible and is blank
// otherwise.  Row 0 is all zeros (including column 0); every other row is
// blank at column 0.
struct OdotTable {
    std::int64_t level = 0;
    std::vector<std::vector<std::optional<Residue>>> cells; // [a][m]

    friend bool operator==(const OdotTable&, const OdotTable&) = default;
};

OdotTable build_odot_table(Level level);

enum class TableFormat {
    Text, // fixed-width grid, blank cells left empty
    Csv,  // header "l=<l>,0,1,..."; blank cells are empty fields
    Json, // {"cells": [[...null...]], "level": l}
};

// Rendering is byte-deterministic, and emit -> parse -> emit is the
// identity for every format.
std::string emit_table(const OdotTable& table, TableFormat format);

// Inverse of emit_table; throws DomainError on malformed input.
OdotTable parse_table(const std::string& text, TableFormat format);

} // namespace levelghost

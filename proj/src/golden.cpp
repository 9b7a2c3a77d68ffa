#include "levelghost/golden.hpp"

#include <sstream>
#include <string>

#include "levelghost/errors.hpp"

namespace levelghost::golden {

const char* const kReferenceTable6 = R"(0 0 0 0 0 0
. 1 . . . 5
. 2 2 . 4 4
. 3 . 3 . 3
. 4 4 . 2 2
. 5 . . . 1)";

const char* const kReferenceTable12 = R"(0 0 0 0 0 0 0 0 0 0 0 0
. 1 . . . 5 . 7 . . . 11
. 2 2 . . 10 . 2 . . 10 10
. 3 . 3 . 3 . 9 . 9 . 9
. 4 4 . 4 8 . 4 8 . 8 8
. 5 . . . 1 . 11 . . . 7
. 6 6 6 . 6 6 6 . 6 6 6
. 7 . . . 11 . 1 . . . 5
. 8 8 . 8 4 . 8 4 . 4 4
. 9 . 9 . 9 . 3 . 3 . 3
. 10 10 . . 2 . 10 . . 2 2
. 11 . . . 7 . 5 . . . 1)";

OdotTable decode_reference_table(std::int64_t level, const char* grid) {
    OdotTable table;
    table.level = level;
    table.cells.assign(static_cast<std::size_t>(level),
                       std::vector<std::optional<Residue>>(static_cast<std::size_t>(level)));
    std::istringstream in(grid);
    for (std::int64_t a = 0; a < level; ++a) {
        for (std::int64_t m = 0; m < level; ++m) {
            std::string token;
            if (!(in >> token)) {
                throw InternalConsistencyError("reference table grid is truncated");
            }
            if (token != ".") {
                table.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] =
                    std::stoll(token);
            }
        }
    }
    return table;
}

const std::array<std::array<std::int64_t, 3>, 40> kTabulatedMultisets40 = {{
    {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 2, 7}, {1, 2, 8}, {1, 3, 4}, {1, 3, 5},
    {1, 3, 6}, {1, 3, 7}, {1, 4, 5}, {1, 4, 6}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {1, 1, 1},
    {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {1, 1, 5}, {1, 1, 6}, {1, 1, 7}, {1, 1, 8}, {1, 1, 9},
    {1, 2, 2}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 2, 5}, {2, 2, 6}, {2, 2, 7}, {1, 3, 3},
    {2, 3, 3}, {3, 3, 3}, {3, 3, 4}, {3, 3, 5}, {1, 4, 4}, {2, 4, 4}, {3, 4, 4}, {1, 5, 5},
}};

const std::array<std::array<std::int64_t, 3>, 6> kSurvivorMultisets = {{
    {1, 1, 1}, {1, 1, 5}, {1, 1, 7}, {1, 5, 5}, {2, 2, 2}, {3, 3, 3},
}};

const std::array<NamedAdmissible, 24> kNamedAdmissible = {{
    // arrangement (1,1,1)
    {{1, 1, 1}, {1, 11, 1}},
    {{1, 1, 1}, {11, 1, 11}},
    {{1, 1, 1}, {7, 5, 7}},
    {{1, 1, 1}, {5, 7, 5}},
    // arrangements (1,5,1), (3,3,3), (5,1,5)
    {{1, 5, 1}, {1, 7, 1}},
    {{1, 5, 1}, {7, 1, 7}},
    {{1, 5, 1}, {5, 11, 5}},
    {{1, 5, 1}, {11, 5, 11}},
    {{3, 3, 3}, {1, 7, 1}},
    {{3, 3, 3}, {7, 1, 7}},
    {{3, 3, 3}, {5, 11, 5}},
    {{3, 3, 3}, {11, 5, 11}},
    {{5, 1, 5}, {1, 7, 1}},
    {{5, 1, 5}, {7, 1, 7}},
    {{5, 1, 5}, {5, 11, 5}},
    {{5, 1, 5}, {11, 5, 11}},
    // arrangements (1,7,1), (2,2,2)
    {{1, 7, 1}, {1, 5, 1}},
    {{1, 7, 1}, {5, 1, 5}},
    {{1, 7, 1}, {7, 11, 7}},
    {{1, 7, 1}, {11, 7, 11}},
    {{2, 2, 2}, {1, 5, 1}},
    {{2, 2, 2}, {5, 1, 5}},
    {{2, 2, 2}, {7, 11, 7}},
    {{2, 2, 2}, {11, 7, 11}},
}};

const std::array<SweepExpectation, 14> kClassificationSweep = {{
    {2, 0},
    {3, 0},
    {4, 0},
    {5, 3},
    {6, 0},
    {7, 3},
    {8, 3},
    {9, 3},
    {10, 3},
    {11, 3},
    {12, 4},
    {13, 3},
    {14, 3},
    {15, 3},
}};

} // namespace levelghost::golden

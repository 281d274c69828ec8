#pragma once

// Frozen reference data for the worked 12 x 36 composition example: the two
// inputs (4 x 4 with n = k = 2 and 9 x 9 with n = k = 3), their support
// tuple sets, the truncated tuple set of the second input, the 36 composed
// tuples in output order, and the dense 0/1 target matrix.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "blockcs/block_matrix.hpp"

namespace fixtures {

// tuples of the 4 x 4 input (n = 2, k = 2)
inline const std::vector<std::array<bcs::Index, 2>> kPsiTuples = {
    {1, 1}, {2, 2}, {1, 2}, {2, 1}};

// tuples of the 9 x 9 input (n = 3, k = 3)
inline const std::vector<std::array<bcs::Index, 3>> kPsiPrimeTuples = {
    {1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {1, 2, 3}, {2, 3, 1},
    {3, 1, 2}, {1, 3, 2}, {2, 1, 3}, {3, 2, 1}};

// the 9 x 9 input truncated to its first two blocks
inline const std::vector<std::array<bcs::Index, 2>> kPsiPrimeTruncatedTuples = {
    {1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {3, 1}, {1, 3}, {2, 1}, {3, 2}};

// the 36 composed tuples, in output column order
inline const std::vector<std::array<bcs::Index, 2>> kComposedTuples = {
    {1, 1}, {4, 4}, {1, 4}, {4, 1}, {2, 2}, {5, 5}, {2, 5}, {5, 2}, {3, 3},
    {6, 6}, {3, 6}, {6, 3}, {1, 2}, {4, 5}, {1, 5}, {4, 2}, {2, 3}, {5, 6},
    {2, 6}, {5, 3}, {3, 1}, {6, 4}, {3, 4}, {6, 1}, {1, 3}, {4, 6}, {1, 6},
    {4, 3}, {2, 1}, {5, 4}, {2, 4}, {5, 1}, {3, 2}, {6, 5}, {3, 5}, {6, 2}};

// dense 12 x 36 target, one string per row
inline const std::array<std::string_view, 12> kComposedDenseRows = {
    "101000000000101000000000101000000000",
    "000010100000000010100000000010100000",
    "000000001010000000001010000000001010",
    "010100000000010100000000010100000000",
    "000001010000000001010000000001010000",
    "000000000101000000000101000000000101",
    "100100000000000000001001000010010000",
    "000010010000100100000000000000001001",
    "000000001001000010010000100100000000",
    "011000000000000000000110000001100000",
    "000001100000011000000000000000000110",
    "000000000110000001100000011000000000",
};

// flattens a tuple-array fixture for comparison against entries()
template <std::size_t K>
std::vector<bcs::Index> flatten(const std::vector<std::array<bcs::Index, K>>& tuples) {
    std::vector<bcs::Index> out;
    out.reserve(tuples.size() * K);
    for (const auto& t : tuples) out.insert(out.end(), t.begin(), t.end());
    return out;
}

} // namespace fixtures

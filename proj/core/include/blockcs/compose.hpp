#pragma once

#include <span>

#include "blockcs/block_matrix.hpp"

namespace bcs {

struct ComposeParams {
    Index retained_blocks; // k: blocks kept from each input, k <= min(k_a, k_b)
};

// Fuses two block binary matrices into one of shape (n_a * n_b * k) x (M_a * M_b).
//
// Each input is truncated to its first k blocks; the output column for the
// pair (i, j) interleaves the two tuples as
//
//     out[l] = b_j[l] + n_b * (a_i[l] - 1),   l = 1..k,
//
// so every entry lies in {1 .. n_a * n_b}. Output columns are ordered with
// j (over b's columns) as the outer index and i as the inner one: output
// column (j-1) * M_a + i. Two output columns agree in block l only when both
// parent pairs agree there, so the declared bound of the result is
// max(r_a, r_b) and its coherence is at most max(r_a, r_b) / k.
//
// Truncation that makes columns of either input collide would put repeated
// columns into the output; that raises DuplicateColumnError.
BlockBinaryMatrix compose(const BlockBinaryMatrix& a, const BlockBinaryMatrix& b,
                          const ComposeParams& params);

// Left fold of compose with the same retained block count at every step.
// The result has block size prod(n_i), k blocks, prod(M_i) columns and
// declared bound max(r_i).
BlockBinaryMatrix compose_chain(std::span<const BlockBinaryMatrix> matrices,
                                Index retained_blocks);

} // namespace bcs

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "blockcs/block_matrix.hpp"

namespace bcs {

// Square +-1 matrix with pairwise orthogonal rows: H * H^T = order * I.
// Built by Sylvester doubling, so only power-of-two orders exist here.
class HadamardMatrix {
public:
    [[nodiscard]] Index order() const { return order_; }

    // 1-based row/column access.
    [[nodiscard]] int entry(Index row, Index col) const {
        return entries_[std::size_t{row - 1} * order_ + (col - 1)];
    }

private:
    friend HadamardMatrix hadamard_sylvester(Index order);
    HadamardMatrix(Index order, std::vector<std::int8_t> entries)
        : order_(order), entries_(std::move(entries)) {}

    Index order_;
    std::vector<std::int8_t> entries_;
};

// H_1 = [+1]; H_{2m} = [[H_m, H_m], [H_m, -H_m]]. Rejects orders that are
// not powers of two.
[[nodiscard]] HadamardMatrix hadamard_sylvester(Index order);

// Sparse matrix over {-1, 0, +1} with uniform column weight, stored as
// per-column (row, sign) lists with strictly increasing rows. Two forms
// arise: the sign-flip of a block binary matrix keeps the block structure
// (one nonzero per block, block_size/block_count available), while the
// Hadamard expansion produces plain uniform-weight columns.
class TernaryMatrix {
public:
    static TernaryMatrix from_block_columns(Index block_size, Index block_count,
                                            std::vector<Index> positions,
                                            std::vector<std::int8_t> signs,
                                            Index overlap_bound);

    static TernaryMatrix from_sparse_columns(std::size_t rows, Index column_weight,
                                             std::vector<Index> row_indices,
                                             std::vector<std::int8_t> signs,
                                             Index overlap_bound);

    [[nodiscard]] std::size_t row_count() const { return rows_; }
    [[nodiscard]] std::size_t column_count() const { return rows_idx_.size() / weight_; }
    [[nodiscard]] Index column_weight() const { return weight_; }
    [[nodiscard]] Index overlap_bound() const { return r_; }

    [[nodiscard]] bool has_block_structure() const { return block_size_.has_value(); }
    [[nodiscard]] Index block_size() const { return *block_size_; }
    [[nodiscard]] Index block_count() const { return weight_; }

    // 1-based rows, strictly ascending per column.
    [[nodiscard]] std::span<const Index> column_rows(std::size_t i) const {
        return {rows_idx_.data() + i * weight_, weight_};
    }
    [[nodiscard]] std::span<const std::int8_t> column_signs(std::size_t i) const {
        return {signs_.data() + i * weight_, weight_};
    }

    [[nodiscard]] std::int64_t column_inner_product(std::size_t i, std::size_t j) const;

    // Row-major -1/0/+1 materialization.
    [[nodiscard]] std::vector<std::int8_t> dense() const;

    friend bool operator==(const TernaryMatrix& a, const TernaryMatrix& b) {
        return a.rows_ == b.rows_ && a.weight_ == b.weight_ &&
               a.block_size_ == b.block_size_ && a.rows_idx_ == b.rows_idx_ &&
               a.signs_ == b.signs_;
    }

private:
    TernaryMatrix() = default;

    std::size_t rows_{0};
    Index weight_{0};
    Index r_{0};
    std::optional<Index> block_size_; // set for block-form matrices
    std::vector<Index> rows_idx_;     // M * weight, ascending within a column
    std::vector<std::int8_t> signs_;  // M * weight, each -1 or +1
};

// Sign-flip ternary construction: keeps the support of phi and negates the
// 1 in block l of a column exactly when l exceeds the within-block position
// there. The sign at a support cell depends only on (block, position), so
// |<out_i, out_j>| equals the binary support overlap for every column pair;
// coherence and density are unchanged.
[[nodiscard]] TernaryMatrix sign_flip(const BlockBinaryMatrix& phi);

// Smallest admissible Hadamard surplus: the least d in {0..overlap_bound}
// such that weight + d is a power of two, if any.
[[nodiscard]] std::optional<Index> admissible_hadamard_surplus(Index weight,
                                                               Index overlap_bound);

// Hadamard expansion: every column of psi (weight k, overlap bound r) spawns
// k + r_prime ternary columns. The s-th smallest support row of the parent
// receives row s of the order-(k + r_prime) Sylvester matrix; spawned column
// t takes entry H[s][t] there. Output shape is rows x M*(k + r_prime);
// columns spawned by one parent have |inner product| <= r_prime, columns of
// different parents |inner product| <= r, so coherence is at most r / k.
[[nodiscard]] TernaryMatrix hadamard_expand(const BlockBinaryMatrix& psi, Index r_prime);

} // namespace bcs

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "blockcs/error.hpp"

namespace bcs {

// All positions, row indices and tuple entries are 1-based at the API
// surface; this matches the file formats and keeps the combinatorics
// readable. Internal 0-basing never leaks out.
using Index = std::uint32_t;

class BlockBinaryMatrix;

// The column-support tuples of a block binary matrix: M tuples of length k
// over the alphabet {1..n}. Entry l of a tuple is the within-block position
// of the single 1 in row block l of the corresponding column. The tuple set
// and the matrix are two views of the same object.
class SupportTupleSet {
public:
    SupportTupleSet(Index alphabet_size, Index tuple_length, std::vector<Index> entries);

    [[nodiscard]] Index alphabet_size() const { return n_; }   // n
    [[nodiscard]] Index tuple_length() const { return k_; }    // k
    [[nodiscard]] std::size_t size() const { return entries_.size() / k_; } // M

    [[nodiscard]] std::span<const Index> tuple(std::size_t i) const {
        return {entries_.data() + i * k_, k_};
    }
    [[nodiscard]] const std::vector<Index>& entries() const { return entries_; }

    friend bool operator==(const SupportTupleSet&, const SupportTupleSet&) = default;

private:
    Index n_;
    Index k_;
    std::vector<Index> entries_; // flattened, M * k
};

// Sparse binary matrix with k row blocks of size n and exactly one 1 per
// block in every column; stored as its support tuples. The overlap bound r
// is declared metadata: constructors may set it from the construction's
// theory, and re-verification is available through max_overlap / verify.
//
// Structural equality (operator==) compares n, k and the columns, not the
// declared bound.
class BlockBinaryMatrix {
public:
    BlockBinaryMatrix(Index block_size, Index block_count, std::vector<Index> entries,
                      Index overlap_bound);

    // Builds the matrix from explicit per-column support row lists
    // (1-based dense row indices). Columns with zero or multiple ones in
    // some block are rejected. When no bound is supplied the actual
    // maximum pairwise overlap is computed by brute force.
    static BlockBinaryMatrix from_column_supports(Index block_size, Index block_count,
                                                  const std::vector<std::vector<Index>>& supports,
                                                  std::optional<Index> overlap_bound = {});

    [[nodiscard]] Index block_size() const { return n_; }     // n
    [[nodiscard]] Index block_count() const { return k_; }    // k
    [[nodiscard]] std::size_t column_count() const { return entries_.size() / k_; } // M
    [[nodiscard]] std::size_t row_count() const { return std::size_t{n_} * k_; }
    [[nodiscard]] Index overlap_bound() const { return r_; }  // declared r

    [[nodiscard]] std::span<const Index> column_tuple(std::size_t i) const {
        return {entries_.data() + i * k_, k_};
    }
    [[nodiscard]] const std::vector<Index>& entries() const { return entries_; }

    // 1-based dense row indices of column i, ascending: (l-1)*n + t_l.
    [[nodiscard]] std::vector<Index> column_support(std::size_t i) const;

    // Row-major 0/1 materialization, row_count() * column_count() bytes.
    [[nodiscard]] std::vector<std::uint8_t> dense() const;

    friend bool operator==(const BlockBinaryMatrix& a, const BlockBinaryMatrix& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.entries_ == b.entries_;
    }

private:
    Index n_;
    Index k_;
    Index r_;
    std::vector<Index> entries_; // flattened column tuples, M * k
};

// Reads off the support tuples of every column.
SupportTupleSet matrix_to_tuples(const BlockBinaryMatrix& m);

// Inverse of matrix_to_tuples: places the 1 for tuple entry a_l of column j
// at dense row (l-1)*n + a_l. When no bound is supplied the actual maximum
// pairwise overlap is computed by brute force.
BlockBinaryMatrix tuples_to_matrix(const SupportTupleSet& s,
                                   std::optional<Index> overlap_bound = {});

// Keeps only the first new_block_count entries of every column tuple.
// Overlaps cannot grow on a sub-tuple, so the declared bound stays valid.
// Truncation can make columns collide; that is an error unless deduplicate
// is set, in which case later duplicates are dropped (first occurrence wins).
BlockBinaryMatrix truncate_blocks(const BlockBinaryMatrix& m, Index new_block_count,
                                  bool deduplicate = false);

namespace detail {

// Checks 1 <= entry <= alphabet for all entries and that all tuples are
// pairwise distinct. Shared by the constructors.
void validate_tuples(Index alphabet, Index tuple_length, std::span<const Index> entries);

// Maximum pairwise agreement count over all column pairs of a flattened
// tuple list; 0 when fewer than two columns.
Index max_tuple_overlap(std::span<const Index> entries, std::size_t columns, Index tuple_length);

} // namespace detail

} // namespace bcs

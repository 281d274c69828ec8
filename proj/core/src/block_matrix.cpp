#include "blockcs/block_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bcs {

namespace detail {

void validate_tuples(Index alphabet, Index tuple_length, std::span<const Index> entries) {
    if (alphabet == 0) throw ParameterError("block size must be positive");
    if (tuple_length == 0) throw ParameterError("block count must be positive");
    if (entries.size() % tuple_length != 0)
        throw MalformedMatrixError("tuple data length is not a multiple of the tuple length");

    for (const Index e : entries) {
        if (e < 1 || e > alphabet)
            throw RangeError("tuple entry " + std::to_string(e) + " outside {1.." +
                             std::to_string(alphabet) + "}");
    }

    const std::size_t columns = entries.size() / tuple_length;
    if (columns < 2) return;

    std::vector<std::uint32_t> order(columns);
    std::iota(order.begin(), order.end(), 0u);
    const auto tuple_of = [&](std::uint32_t c) {
        return entries.subspan(std::size_t{c} * tuple_length, tuple_length);
    };
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const auto ta = tuple_of(a), tb = tuple_of(b);
        return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
    });
    for (std::size_t i = 1; i < columns; ++i) {
        const auto ta = tuple_of(order[i - 1]), tb = tuple_of(order[i]);
        if (std::equal(ta.begin(), ta.end(), tb.begin(), tb.end()))
            throw DuplicateColumnError("columns " + std::to_string(order[i - 1] + 1) + " and " +
                                       std::to_string(order[i] + 1) + " are identical");
    }
}

Index max_tuple_overlap(std::span<const Index> entries, std::size_t columns, Index tuple_length) {
    Index best = 0;
    const Index k = tuple_length;
    for (std::size_t i = 0; i + 1 < columns; ++i) {
        const Index* a = entries.data() + i * k;
        for (std::size_t j = i + 1; j < columns; ++j) {
            const Index* b = entries.data() + j * k;
            Index agree = 0;
            for (Index l = 0; l < k; ++l) agree += (a[l] == b[l]);
            if (agree > best) {
                best = agree;
                if (best == k) return best; // identical columns, cannot grow
            }
        }
    }
    return best;
}

} // namespace detail

SupportTupleSet::SupportTupleSet(Index alphabet_size, Index tuple_length,
                                 std::vector<Index> entries)
    : n_(alphabet_size), k_(tuple_length), entries_(std::move(entries)) {
    detail::validate_tuples(n_, k_, entries_);
}

BlockBinaryMatrix::BlockBinaryMatrix(Index block_size, Index block_count,
                                     std::vector<Index> entries, Index overlap_bound)
    : n_(block_size), k_(block_count), r_(overlap_bound), entries_(std::move(entries)) {
    detail::validate_tuples(n_, k_, entries_);
}

BlockBinaryMatrix BlockBinaryMatrix::from_column_supports(
    Index block_size, Index block_count, const std::vector<std::vector<Index>>& supports,
    std::optional<Index> overlap_bound) {
    const Index n = block_size, k = block_count;
    if (n == 0 || k == 0) throw ParameterError("block size and block count must be positive");

    std::vector<Index> entries;
    entries.reserve(supports.size() * k);
    for (std::size_t col = 0; col < supports.size(); ++col) {
        std::vector<Index> positions(k, 0); // within-block position per block, 0 = unset
        for (const Index row : supports[col]) {
            if (row < 1 || row > std::size_t{n} * k)
                throw MalformedMatrixError("column " + std::to_string(col + 1) + ": row " +
                                           std::to_string(row) + " out of range");
            const Index block = (row - 1) / n; // 0-based
            if (positions[block] != 0)
                throw MalformedMatrixError("column " + std::to_string(col + 1) + ": block " +
                                           std::to_string(block + 1) + " contains multiple ones");
            positions[block] = (row - 1) % n + 1;
        }
        for (Index block = 0; block < k; ++block) {
            if (positions[block] == 0)
                throw MalformedMatrixError("column " + std::to_string(col + 1) + ": block " +
                                           std::to_string(block + 1) + " contains no one");
            entries.push_back(positions[block]);
        }
    }

    const Index r = overlap_bound
                        ? *overlap_bound
                        : detail::max_tuple_overlap(entries, supports.size(), k);
    return BlockBinaryMatrix(n, k, std::move(entries), r);
}

std::vector<Index> BlockBinaryMatrix::column_support(std::size_t i) const {
    std::vector<Index> rows(k_);
    const auto t = column_tuple(i);
    for (Index l = 0; l < k_; ++l) rows[l] = l * n_ + t[l];
    return rows;
}

std::vector<std::uint8_t> BlockBinaryMatrix::dense() const {
    const std::size_t rows = row_count(), cols = column_count();
    std::vector<std::uint8_t> out(rows * cols, 0);
    for (std::size_t c = 0; c < cols; ++c) {
        const auto t = column_tuple(c);
        for (Index l = 0; l < k_; ++l) {
            const std::size_t row = std::size_t{l} * n_ + (t[l] - 1);
            out[row * cols + c] = 1;
        }
    }
    return out;
}

SupportTupleSet matrix_to_tuples(const BlockBinaryMatrix& m) {
    return SupportTupleSet(m.block_size(), m.block_count(), m.entries());
}

BlockBinaryMatrix tuples_to_matrix(const SupportTupleSet& s, std::optional<Index> overlap_bound) {
    const Index r = overlap_bound ? *overlap_bound
                                  : detail::max_tuple_overlap(s.entries(), s.size(),
                                                              s.tuple_length());
    return BlockBinaryMatrix(s.alphabet_size(), s.tuple_length(), s.entries(), r);
}

BlockBinaryMatrix truncate_blocks(const BlockBinaryMatrix& m, Index new_block_count,
                                  bool deduplicate) {
    const Index k = m.block_count();
    if (new_block_count < 1 || new_block_count > k)
        throw RangeError("new block count " + std::to_string(new_block_count) +
                         " outside {1.." + std::to_string(k) + "}");
    if (new_block_count == k) return m;

    const std::size_t cols = m.column_count();
    std::vector<Index> entries;
    entries.reserve(cols * new_block_count);
    for (std::size_t c = 0; c < cols; ++c) {
        const auto t = m.column_tuple(c);
        entries.insert(entries.end(), t.begin(), t.begin() + new_block_count);
    }

    if (deduplicate) {
        std::vector<Index> kept;
        kept.reserve(entries.size());
        std::vector<std::span<const Index>> seen;
        for (std::size_t c = 0; c < cols; ++c) {
            const std::span<const Index> t{entries.data() + c * new_block_count,
                                           new_block_count};
            const bool dup = std::any_of(seen.begin(), seen.end(), [&](auto s) {
                return std::equal(s.begin(), s.end(), t.begin(), t.end());
            });
            if (!dup) {
                seen.push_back(t);
                kept.insert(kept.end(), t.begin(), t.end());
            }
        }
        entries = std::move(kept);
    }

    // Sub-tuple overlaps are a subset of the original agreement positions,
    // so min(r, k_new) stays a valid declared bound.
    const Index r = std::min(m.overlap_bound(), new_block_count);
    return BlockBinaryMatrix(m.block_size(), new_block_count, std::move(entries), r);
}

} // namespace bcs

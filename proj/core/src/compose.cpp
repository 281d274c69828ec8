#include "blockcs/compose.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace bcs {

namespace {

// Rejects inputs whose first-k prefixes collide: those pairs would become
// identical output columns.
void check_prefixes_distinct(const BlockBinaryMatrix& m, Index k, const char* which) {
    if (k == m.block_count()) return; // full tuples are distinct by invariant
    const std::size_t cols = m.column_count();
    if (cols < 2) return;

    std::vector<std::uint32_t> order(cols);
    std::iota(order.begin(), order.end(), 0u);
    const auto prefix = [&](std::uint32_t c) { return m.column_tuple(c).first(k); };
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const auto ta = prefix(a), tb = prefix(b);
        return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
    });
    for (std::size_t i = 1; i < cols; ++i) {
        const auto ta = prefix(order[i - 1]), tb = prefix(order[i]);
        if (std::equal(ta.begin(), ta.end(), tb.begin(), tb.end()))
            throw DuplicateColumnError(
                std::string("truncating the ") + which + " input to " + std::to_string(k) +
                " blocks makes columns " + std::to_string(order[i - 1] + 1) + " and " +
                std::to_string(order[i] + 1) + " collide");
    }
}

} // namespace

BlockBinaryMatrix compose(const BlockBinaryMatrix& a, const BlockBinaryMatrix& b,
                          const ComposeParams& params) {
    const Index k = params.retained_blocks;
    if (k < 1 || k > std::min(a.block_count(), b.block_count()))
        throw ParameterError("retained block count " + std::to_string(k) +
                             " exceeds min(" + std::to_string(a.block_count()) + ", " +
                             std::to_string(b.block_count()) + ")");
    const Index r_out = std::max(a.overlap_bound(), b.overlap_bound());
    if (r_out > k)
        throw ParameterError("overlap bound max(" + std::to_string(a.overlap_bound()) + ", " +
                             std::to_string(b.overlap_bound()) +
                             ") exceeds the retained block count " + std::to_string(k));

    const std::uint64_t n_out = std::uint64_t{a.block_size()} * b.block_size();
    const std::uint64_t m_out = std::uint64_t{a.column_count()} * b.column_count();
    if (n_out > (std::numeric_limits<Index>::max)() ||
        m_out * k > (std::numeric_limits<std::uint32_t>::max)())
        throw ParameterError("composed matrix exceeds the supported size");

    check_prefixes_distinct(a, k, "first");
    check_prefixes_distinct(b, k, "second");

    const Index nb = b.block_size();
    std::vector<Index> entries;
    entries.reserve(m_out * k);
    for (std::size_t j = 0; j < b.column_count(); ++j) {
        const auto tb = b.column_tuple(j);
        for (std::size_t i = 0; i < a.column_count(); ++i) {
            const auto ta = a.column_tuple(i);
            for (Index l = 0; l < k; ++l) entries.push_back(tb[l] + nb * (ta[l] - 1));
        }
    }

    return BlockBinaryMatrix(static_cast<Index>(n_out), k, std::move(entries), r_out);
}

BlockBinaryMatrix compose_chain(std::span<const BlockBinaryMatrix> matrices,
                                Index retained_blocks) {
    if (matrices.size() < 2)
        throw ParameterError("composition chain needs at least two matrices");
    BlockBinaryMatrix acc = compose(matrices[0], matrices[1], {retained_blocks});
    for (std::size_t i = 2; i < matrices.size(); ++i)
        acc = compose(acc, matrices[i], {retained_blocks});
    return acc;
}

} // namespace bcs

#include "blockcs/ternary.hpp"

#include <string>

namespace bcs {

namespace {

bool is_power_of_two(Index v) { return v != 0 && (v & (v - 1)) == 0; }

void validate_ternary(std::size_t rows, Index weight, const std::vector<Index>& row_indices,
                      const std::vector<std::int8_t>& signs) {
    if (rows == 0) throw ParameterError("row count must be positive");
    if (weight == 0) throw ParameterError("column weight must be positive");
    if (row_indices.size() != signs.size())
        throw MalformedMatrixError("row index and sign arrays differ in length");
    if (row_indices.size() % weight != 0)
        throw MalformedMatrixError("entry count is not a multiple of the column weight");
    const std::size_t cols = row_indices.size() / weight;
    for (std::size_t c = 0; c < cols; ++c) {
        Index prev = 0;
        for (Index s = 0; s < weight; ++s) {
            const Index row = row_indices[c * weight + s];
            if (row < 1 || row > rows)
                throw MalformedMatrixError("column " + std::to_string(c + 1) + ": row " +
                                           std::to_string(row) + " out of range");
            if (row <= prev)
                throw MalformedMatrixError("column " + std::to_string(c + 1) +
                                           ": rows not strictly ascending");
            prev = row;
            const std::int8_t sign = signs[c * weight + s];
            if (sign != 1 && sign != -1)
                throw MalformedMatrixError("column " + std::to_string(c + 1) +
                                           ": sign must be -1 or +1");
        }
    }
}

} // namespace

HadamardMatrix hadamard_sylvester(Index order) {
    if (!is_power_of_two(order))
        throw ParameterError("Hadamard order " + std::to_string(order) +
                             " is not a power of two");
    std::vector<std::int8_t> e(std::size_t{order} * order, 1);
    for (Index m = 1; m < order; m *= 2) {
        // grow the top-left m x m block to 2m x 2m
        for (Index i = 0; i < m; ++i) {
            for (Index j = 0; j < m; ++j) {
                const std::int8_t v = e[std::size_t{i} * order + j];
                e[std::size_t{i} * order + (j + m)] = v;
                e[std::size_t{i + m} * order + j] = v;
                e[std::size_t{i + m} * order + (j + m)] = static_cast<std::int8_t>(-v);
            }
        }
    }
    return HadamardMatrix(order, std::move(e));
}

TernaryMatrix TernaryMatrix::from_block_columns(Index block_size, Index block_count,
                                                std::vector<Index> positions,
                                                std::vector<std::int8_t> signs,
                                                Index overlap_bound) {
    detail::validate_tuples(block_size, block_count, positions);
    std::vector<Index> rows(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const Index block = static_cast<Index>(i % block_count);
        rows[i] = block * block_size + positions[i];
    }
    TernaryMatrix t;
    t.rows_ = std::size_t{block_size} * block_count;
    t.weight_ = block_count;
    t.r_ = overlap_bound;
    t.block_size_ = block_size;
    t.rows_idx_ = std::move(rows);
    t.signs_ = std::move(signs);
    validate_ternary(t.rows_, t.weight_, t.rows_idx_, t.signs_);
    return t;
}

TernaryMatrix TernaryMatrix::from_sparse_columns(std::size_t rows, Index column_weight,
                                                 std::vector<Index> row_indices,
                                                 std::vector<std::int8_t> signs,
                                                 Index overlap_bound) {
    validate_ternary(rows, column_weight, row_indices, signs);
    TernaryMatrix t;
    t.rows_ = rows;
    t.weight_ = column_weight;
    t.r_ = overlap_bound;
    t.rows_idx_ = std::move(row_indices);
    t.signs_ = std::move(signs);
    return t;
}

std::int64_t TernaryMatrix::column_inner_product(std::size_t i, std::size_t j) const {
    const auto ri = column_rows(i), rj = column_rows(j);
    const auto si = column_signs(i), sj = column_signs(j);
    std::int64_t acc = 0;
    std::size_t a = 0, b = 0;
    while (a < ri.size() && b < rj.size()) {
        if (ri[a] == rj[b]) {
            acc += std::int64_t{si[a]} * sj[b];
            ++a;
            ++b;
        } else if (ri[a] < rj[b]) {
            ++a;
        } else {
            ++b;
        }
    }
    return acc;
}

std::vector<std::int8_t> TernaryMatrix::dense() const {
    const std::size_t cols = column_count();
    std::vector<std::int8_t> out(rows_ * cols, 0);
    for (std::size_t c = 0; c < cols; ++c) {
        const auto rows = column_rows(c);
        const auto signs = column_signs(c);
        for (std::size_t s = 0; s < rows.size(); ++s)
            out[std::size_t{rows[s] - 1} * cols + c] = signs[s];
    }
    return out;
}

TernaryMatrix sign_flip(const BlockBinaryMatrix& phi) {
    const Index k = phi.block_count();
    const std::size_t cols = phi.column_count();
    std::vector<std::int8_t> signs(cols * k);
    for (std::size_t c = 0; c < cols; ++c) {
        const auto t = phi.column_tuple(c);
        for (Index l = 0; l < k; ++l)
            signs[c * k + l] = (l + 1 > t[l]) ? std::int8_t{-1} : std::int8_t{1};
    }
    return TernaryMatrix::from_block_columns(phi.block_size(), k, phi.entries(),
                                             std::move(signs), phi.overlap_bound());
}

std::optional<Index> admissible_hadamard_surplus(Index weight, Index overlap_bound) {
    for (Index d = 0; d <= overlap_bound; ++d)
        if (is_power_of_two(weight + d)) return d;
    return std::nullopt;
}

TernaryMatrix hadamard_expand(const BlockBinaryMatrix& psi, Index r_prime) {
    const Index k = psi.block_count();
    const Index r = psi.overlap_bound();
    if (r_prime > r)
        throw ParameterError("Hadamard surplus " + std::to_string(r_prime) +
                             " exceeds the overlap bound " + std::to_string(r));
    const Index order = k + r_prime;
    if (!is_power_of_two(order)) {
        std::string msg = "no Hadamard matrix of order " + std::to_string(order) +
                          " (column weight " + std::to_string(k) + " + surplus " +
                          std::to_string(r_prime) + ")";
        if (const auto d = admissible_hadamard_surplus(k, r))
            msg += "; smallest admissible surplus is " + std::to_string(*d);
        else
            msg += "; no surplus in {0.." + std::to_string(r) + "} gives a power of two";
        throw ParameterError(msg);
    }
    const HadamardMatrix h = hadamard_sylvester(order);

    const std::size_t parents = psi.column_count();
    std::vector<Index> rows;
    std::vector<std::int8_t> signs;
    rows.reserve(parents * order * k);
    signs.reserve(parents * order * k);
    for (std::size_t c = 0; c < parents; ++c) {
        const auto support = psi.column_support(c); // ascending by construction
        for (Index t = 1; t <= order; ++t) {
            for (Index s = 1; s <= k; ++s) {
                rows.push_back(support[s - 1]);
                signs.push_back(static_cast<std::int8_t>(h.entry(s, t)));
            }
        }
    }
    return TernaryMatrix::from_sparse_columns(psi.row_count(), k, std::move(rows),
                                              std::move(signs), r);
}

} // namespace bcs

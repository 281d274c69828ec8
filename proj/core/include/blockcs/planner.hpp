#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockcs/block_matrix.hpp"
#include "blockcs/devore.hpp"
#include "blockcs/rational.hpp"

namespace bcs {

// Recipe for a binary matrix with an arbitrary target row count m, realized
// as a chain composition of polynomial base matrices: m = k * prod(p_i)
// where k is the smallest prime factor of m and the p_i are the remaining
// prime factors (with multiplicity). Requires at least three prime factors;
// m = 1, m = p, m = p^2 and m = p*q are excluded (for p^2 the base
// construction itself already has p^2 rows).
struct CompositionPlan {
    std::uint64_t target_rows;       // m
    Index retained_blocks;           // k, the smallest prime factor of m
    std::vector<DevoreParams> bases; // remaining prime factors, ascending
    std::uint64_t predicted_rows;    // = m
    std::uint64_t predicted_cols;    // prod p_i^{r_i + 1}
    Rational coherence_bound;        // max(r_i) / k
};

// Prime factorization with multiplicity, ascending. Trial division; the
// tool is desk-scale.
[[nodiscard]] std::vector<std::uint64_t> factorize(std::uint64_t m);

// Builds the plan for row size m. base_degree is the polynomial degree
// used for every base matrix; the default 1 minimizes the coherence bound
// (1/k) and maximizes the admissible range. Larger degrees buy more columns
// at the cost of coherence and must stay below k.
[[nodiscard]] CompositionPlan plan_row_size(std::uint64_t m, Index base_degree = 1);

// Materializes the plan: builds every base matrix and folds them with
// compose_chain. The result is checked against the predicted shape and
// bound before it is returned.
[[nodiscard]] BlockBinaryMatrix execute_plan(const CompositionPlan& plan);

// Human-readable description of a plan.
[[nodiscard]] std::string describe(const CompositionPlan& plan);

} // namespace bcs

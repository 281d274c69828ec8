#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blockcs/block_matrix.hpp"
#include "blockcs/rational.hpp"
#include "blockcs/ternary.hpp"

namespace bcs {

// Exact metrics of a constructed matrix. density and coherence are exact
// rationals: every column has the same weight w, so the normalized inner
// product of a pair is (integer inner product) / w.
struct AnalysisReport {
    std::size_t rows{0};
    std::size_t cols{0};
    Index column_weight{0};
    Rational density;
    Index max_overlap{0};
    Rational coherence;
    std::uint64_t rip_order_bound{0}; // largest s with (s-1) * coherence < 1
    Rational aspect_ratio;            // cols / rows
};

// Exact maximum over all column pairs of the support intersection size
// (binary) or |<c_i, c_j>| (ternary). Exhaustive pairwise scan; throws
// UndefinedMetricError for fewer than two columns.
[[nodiscard]] Index max_overlap(const BlockBinaryMatrix& m);
[[nodiscard]] Index max_overlap(const TernaryMatrix& m);

// max_overlap / column weight. Columns have norm sqrt(weight), so this is
// exactly the mutual coherence of the column-normalized matrix.
[[nodiscard]] Rational coherence(const BlockBinaryMatrix& m);
[[nodiscard]] Rational coherence(const TernaryMatrix& m);

[[nodiscard]] Rational density(const BlockBinaryMatrix& m);
[[nodiscard]] Rational density(const TernaryMatrix& m);

struct RipEstimate {
    Rational delta;     // (order - 1) * coherence
    bool within_regime; // order < 1/coherence + 1, where delta < 1 is guaranteed
};

[[nodiscard]] RipEstimate rip_constant(const BlockBinaryMatrix& m, std::uint64_t order);
[[nodiscard]] RipEstimate rip_constant(const TernaryMatrix& m, std::uint64_t order);

[[nodiscard]] AnalysisReport analyze(const BlockBinaryMatrix& m);
[[nodiscard]] AnalysisReport analyze(const TernaryMatrix& m);

// Shape-level comparison of the chain composition against the Kronecker
// product of the same two inputs: both have M*M' columns, but the composed
// matrix has n*n'*k rows against n*k * n'*k', strictly fewer whenever
// k < k'*k''.
struct ShapeComparison {
    std::size_t composed_rows{0};
    std::size_t composed_cols{0};
    std::size_t kronecker_rows{0};
    std::size_t kronecker_cols{0};
    Rational composed_aspect;  // cols / rows
    Rational kronecker_aspect; // cols / rows
    bool composed_strictly_shorter{false};
};

[[nodiscard]] ShapeComparison kronecker_shape_compare(const BlockBinaryMatrix& a,
                                                      const BlockBinaryMatrix& b, Index k);

// Column-major dense view used by the recovery harness.
struct DenseColumns {
    std::size_t rows{0};
    std::size_t cols{0};
    std::vector<double> data; // rows * cols, column-major
};

[[nodiscard]] DenseColumns to_dense_columns(const BlockBinaryMatrix& m);
[[nodiscard]] DenseColumns to_dense_columns(const TernaryMatrix& m);

struct OmpResult {
    std::vector<std::size_t> support;  // 1-based column indices, ascending
    std::vector<double> coefficients;  // aligned with support
    double residual_norm{0.0};
};

// Orthogonal matching pursuit: repeatedly selects the column with the
// largest |correlation| against the residual (columns unit-normalized for
// selection only, first index wins ties), then solves least squares on the
// active set and updates the residual. Stops after `sparsity` selections or
// once the residual 2-norm drops below 1e-10. Coefficients refer to the
// original (unnormalized) columns. Exact recovery of an s-sparse signal is
// guaranteed when s < (1 + 1/mu) / 2 for coherence mu.
[[nodiscard]] OmpResult omp_recover(const DenseColumns& matrix, std::span<const double> y,
                                    std::size_t sparsity);
[[nodiscard]] OmpResult omp_recover(const BlockBinaryMatrix& m, std::span<const double> y,
                                    std::size_t sparsity);
[[nodiscard]] OmpResult omp_recover(const TernaryMatrix& m, std::span<const double> y,
                                    std::size_t sparsity);

} // namespace bcs

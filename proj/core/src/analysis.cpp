#include "blockcs/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace bcs {

namespace {

constexpr double kResidualTol = 1e-10;

// largest s >= 1 with (s - 1) * mu < 1; an orthogonal matrix (mu = 0) is
// capped at its column count, past which sparsity is meaningless.
std::uint64_t rip_order_limit(const Rational& mu, std::size_t cols) {
    if (mu.num() == 0) return cols;
    return static_cast<std::uint64_t>((mu.den() - 1) / mu.num()) + 1;
}

bool rip_within_regime(const Rational& mu, std::uint64_t order) {
    // order < 1/mu + 1, i.e. (order - 1) * num < den
    return static_cast<__int128>(order - 1) * mu.num() < mu.den();
}

AnalysisReport build_report(std::size_t rows, std::size_t cols, Index weight,
                            Index overlap) {
    AnalysisReport rep;
    rep.rows = rows;
    rep.cols = cols;
    rep.column_weight = weight;
    rep.density = Rational(static_cast<std::int64_t>(weight) * static_cast<std::int64_t>(cols),
                           static_cast<std::int64_t>(rows) * static_cast<std::int64_t>(cols));
    rep.max_overlap = overlap;
    rep.coherence = Rational(overlap, weight);
    rep.rip_order_bound = rip_order_limit(rep.coherence, cols);
    rep.aspect_ratio = Rational(static_cast<std::int64_t>(cols), static_cast<std::int64_t>(rows));
    return rep;
}

} // namespace

Index max_overlap(const BlockBinaryMatrix& m) {
    if (m.column_count() < 2)
        throw UndefinedMetricError("pairwise overlap needs at least two columns");
    return detail::max_tuple_overlap(m.entries(), m.column_count(), m.block_count());
}

Index max_overlap(const TernaryMatrix& m) {
    const std::size_t cols = m.column_count();
    if (cols < 2) throw UndefinedMetricError("pairwise overlap needs at least two columns");
    std::int64_t best = 0;
    for (std::size_t i = 0; i + 1 < cols; ++i) {
        for (std::size_t j = i + 1; j < cols; ++j) {
            const std::int64_t ip = std::abs(m.column_inner_product(i, j));
            if (ip > best) best = ip;
        }
    }
    return static_cast<Index>(best);
}

Rational coherence(const BlockBinaryMatrix& m) {
    return Rational(max_overlap(m), m.block_count());
}

Rational coherence(const TernaryMatrix& m) {
    return Rational(max_overlap(m), m.column_weight());
}

Rational density(const BlockBinaryMatrix& m) {
    return Rational(1, m.block_size());
}

Rational density(const TernaryMatrix& m) {
    return Rational(m.column_weight(), static_cast<std::int64_t>(m.row_count()));
}

RipEstimate rip_constant(const BlockBinaryMatrix& m, std::uint64_t order) {
    if (order < 1) throw ParameterError("RIP order must be positive");
    const Rational mu = coherence(m);
    return {Rational(static_cast<std::int64_t>(order) - 1, 1) * mu, rip_within_regime(mu, order)};
}

RipEstimate rip_constant(const TernaryMatrix& m, std::uint64_t order) {
    if (order < 1) throw ParameterError("RIP order must be positive");
    const Rational mu = coherence(m);
    return {Rational(static_cast<std::int64_t>(order) - 1, 1) * mu, rip_within_regime(mu, order)};
}

AnalysisReport analyze(const BlockBinaryMatrix& m) {
    return build_report(m.row_count(), m.column_count(), m.block_count(), max_overlap(m));
}

AnalysisReport analyze(const TernaryMatrix& m) {
    return build_report(m.row_count(), m.column_count(), m.column_weight(), max_overlap(m));
}

ShapeComparison kronecker_shape_compare(const BlockBinaryMatrix& a, const BlockBinaryMatrix& b,
                                        Index k) {
    if (k < 1 || k > std::min(a.block_count(), b.block_count()))
        throw ParameterError("retained block count " + std::to_string(k) +
                             " exceeds min of the two block counts");
    ShapeComparison cmp;
    cmp.composed_rows = std::size_t{a.block_size()} * b.block_size() * k;
    cmp.composed_cols = a.column_count() * b.column_count();
    cmp.kronecker_rows = a.row_count() * b.row_count();
    cmp.kronecker_cols = cmp.composed_cols;
    cmp.composed_aspect = Rational(static_cast<std::int64_t>(cmp.composed_cols),
                                   static_cast<std::int64_t>(cmp.composed_rows));
    cmp.kronecker_aspect = Rational(static_cast<std::int64_t>(cmp.kronecker_cols),
                                    static_cast<std::int64_t>(cmp.kronecker_rows));
    cmp.composed_strictly_shorter = cmp.composed_rows < cmp.kronecker_rows;
    return cmp;
}

DenseColumns to_dense_columns(const BlockBinaryMatrix& m) {
    DenseColumns d;
    d.rows = m.row_count();
    d.cols = m.column_count();
    d.data.assign(d.rows * d.cols, 0.0);
    for (std::size_t c = 0; c < d.cols; ++c)
        for (const Index row : m.column_support(c)) d.data[c * d.rows + (row - 1)] = 1.0;
    return d;
}

DenseColumns to_dense_columns(const TernaryMatrix& m) {
    DenseColumns d;
    d.rows = m.row_count();
    d.cols = m.column_count();
    d.data.assign(d.rows * d.cols, 0.0);
    for (std::size_t c = 0; c < d.cols; ++c) {
        const auto rows = m.column_rows(c);
        const auto signs = m.column_signs(c);
        for (std::size_t s = 0; s < rows.size(); ++s)
            d.data[c * d.rows + (rows[s] - 1)] = static_cast<double>(signs[s]);
    }
    return d;
}

OmpResult omp_recover(const DenseColumns& matrix, std::span<const double> y,
                      std::size_t sparsity) {
    const std::size_t rows = matrix.rows, cols = matrix.cols;
    if (y.size() != rows)
        throw ParameterError("measurement length " + std::to_string(y.size()) +
                             " does not match row count " + std::to_string(rows));
    if (sparsity < 1 || sparsity > cols)
        throw ParameterError("sparsity must lie in {1..cols}");

    const Eigen::Map<const Eigen::MatrixXd> A(matrix.data.data(),
                                              static_cast<Eigen::Index>(rows),
                                              static_cast<Eigen::Index>(cols));
    Eigen::VectorXd norms(A.cols());
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
        norms(j) = A.col(j).norm();
        if (norms(j) == 0.0)
            throw ParameterError("column " + std::to_string(j + 1) +
                                 " is zero and cannot be normalized for selection");
    }

    const Eigen::Map<const Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(rows));
    OmpResult result;
    Eigen::VectorXd residual = yv;
    if (residual.norm() < kResidualTol) return result; // zero measurement

    std::vector<Eigen::Index> active;
    std::vector<char> selected(cols, 0);
    Eigen::VectorXd coeffs;
    for (std::size_t it = 0; it < sparsity; ++it) {
        Eigen::Index pick = -1;
        double best = -1.0;
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
            if (selected[static_cast<std::size_t>(j)]) continue;
            const double corr = std::abs(A.col(j).dot(residual)) / norms(j);
            if (corr > best) {
                best = corr;
                pick = j;
            }
        }
        active.push_back(pick);
        selected[static_cast<std::size_t>(pick)] = 1;

        Eigen::MatrixXd sub(A.rows(), static_cast<Eigen::Index>(active.size()));
        for (std::size_t c = 0; c < active.size(); ++c) sub.col(static_cast<Eigen::Index>(c)) = A.col(active[c]);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sub);
        if (qr.rank() < static_cast<Eigen::Index>(active.size()))
            throw NumericalDegeneracyError("active set of size " +
                                           std::to_string(active.size()) +
                                           " is rank deficient");
        coeffs = qr.solve(yv);
        residual = yv - sub * coeffs;
        if (residual.norm() < kResidualTol) break;
    }

    // report in ascending column order
    std::vector<std::size_t> perm(active.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return active[a] < active[b]; });
    for (const std::size_t i : perm) {
        result.support.push_back(static_cast<std::size_t>(active[i]) + 1);
        result.coefficients.push_back(coeffs(static_cast<Eigen::Index>(i)));
    }
    result.residual_norm = residual.norm();
    return result;
}

OmpResult omp_recover(const BlockBinaryMatrix& m, std::span<const double> y,
                      std::size_t sparsity) {
    return omp_recover(to_dense_columns(m), y, sparsity);
}

OmpResult omp_recover(const TernaryMatrix& m, std::span<const double> y, std::size_t sparsity) {
    return omp_recover(to_dense_columns(m), y, sparsity);
}

} // namespace bcs

#include "blockcs/planner.hpp"

#include <limits>
#include <sstream>

#include "blockcs/compose.hpp"

namespace bcs {

std::vector<std::uint64_t> factorize(std::uint64_t m) {
    if (m < 2) throw ParameterError("factorization needs m >= 2 (got " + std::to_string(m) + ")");
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        while (m % d == 0) {
            factors.push_back(d);
            m /= d;
        }
    }
    if (m > 1) factors.push_back(m);
    return factors;
}

CompositionPlan plan_row_size(std::uint64_t m, Index base_degree) {
    static constexpr const char* kExclusion =
        " (covered row sizes are those different from p, p^2, pq for primes p, q)";
    if (m < 2)
        throw NotCoveredError("row size " + std::to_string(m) + " has no prime factors" +
                              kExclusion);
    const auto factors = factorize(m);
    if (factors.size() == 1)
        throw NotCoveredError("row size " + std::to_string(m) + " is prime" + kExclusion);
    if (factors.size() == 2) {
        if (factors[0] == factors[1])
            throw NotCoveredError("row size " + std::to_string(m) + " = " +
                                  std::to_string(factors[0]) + "^2" + kExclusion +
                                  "; a devore matrix with p = " + std::to_string(factors[0]) +
                                  " already has p^2 rows");
        throw NotCoveredError("row size " + std::to_string(m) + " = " +
                              std::to_string(factors[0]) + "*" + std::to_string(factors[1]) +
                              " is a product of two distinct primes" + kExclusion);
    }

    CompositionPlan plan;
    plan.target_rows = m;
    plan.retained_blocks = static_cast<Index>(factors[0]);
    if (base_degree < 1 || base_degree >= plan.retained_blocks)
        throw ParameterError("base degree must lie in {1.." +
                             std::to_string(plan.retained_blocks - 1) +
                             "} for row size " + std::to_string(m));

    plan.predicted_rows = m;
    plan.predicted_cols = 1;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        const auto p = factors[i];
        plan.bases.push_back({static_cast<std::uint32_t>(p), base_degree});
        for (Index e = 0; e <= base_degree; ++e) {
            if (plan.predicted_cols > (std::numeric_limits<std::uint64_t>::max)() / p)
                throw ParameterError("predicted column count overflows 64 bits");
            plan.predicted_cols *= p;
        }
    }
    plan.coherence_bound = Rational(base_degree, plan.retained_blocks);
    return plan;
}

BlockBinaryMatrix execute_plan(const CompositionPlan& plan) {
    if (plan.bases.size() < 2) throw ParameterError("plan needs at least two base matrices");
    std::vector<BlockBinaryMatrix> bases;
    bases.reserve(plan.bases.size());
    Index max_degree = 0;
    for (const auto& params : plan.bases) {
        bases.push_back(devore_matrix(params));
        max_degree = std::max(max_degree, params.r);
    }
    BlockBinaryMatrix result = compose_chain(bases, plan.retained_blocks);

    if (result.row_count() != plan.predicted_rows ||
        result.column_count() != plan.predicted_cols ||
        result.overlap_bound() != max_degree)
        throw Error("internal: executed plan does not match its prediction");
    return result;
}

std::string describe(const CompositionPlan& plan) {
    std::ostringstream os;
    os << "target rows " << plan.target_rows << " = " << plan.retained_blocks;
    for (const auto& b : plan.bases) os << " * " << b.p;
    os << "\nretained blocks k = " << plan.retained_blocks << "\nbases:";
    for (const auto& b : plan.bases) {
        std::uint64_t cols = 1;
        for (Index e = 0; e <= b.r; ++e) cols *= b.p;
        os << "\n  devore p=" << b.p << " r=" << b.r << "  (" << std::uint64_t{b.p} * b.p
           << " x " << cols << ")";
    }
    os << "\npredicted shape " << plan.predicted_rows << " x " << plan.predicted_cols
       << "\ncoherence bound " << plan.coherence_bound.str() << "\n";
    return os.str();
}

} // namespace bcs

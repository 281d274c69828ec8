#include "blockcs/column_bound.hpp"

#include <string>

#include "blockcs/error.hpp"

namespace bcs {

namespace {

boost::multiprecision::cpp_int binomial(std::uint64_t n, std::uint64_t k) {
    boost::multiprecision::cpp_int acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i; // exact: acc is C(n-k+i, i) after this step
    }
    return acc;
}

} // namespace

boost::multiprecision::cpp_int max_column_bound(std::uint64_t rows, std::uint64_t weight,
                                                std::uint64_t overlap) {
    if (weight > rows)
        throw ParameterError("column weight " + std::to_string(weight) +
                             " exceeds row count " + std::to_string(rows));
    if (overlap + 1 > weight)
        throw ParameterError("overlap " + std::to_string(overlap) +
                             " must be below the column weight " + std::to_string(weight));
    return binomial(rows, overlap + 1) / binomial(weight, overlap + 1);
}

} // namespace bcs

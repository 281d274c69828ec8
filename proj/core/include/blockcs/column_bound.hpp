#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace bcs {

// Packing bound on the number of columns of a binary matrix with the given
// row count, uniform column weight and pairwise support overlap at most
// `overlap`: floor( C(rows, overlap+1) / C(weight, overlap+1) ). Any two
// columns may share at most `overlap` rows, so each (overlap+1)-subset of
// rows lies inside at most one column support. Exact arbitrary-precision
// arithmetic throughout.
[[nodiscard]] boost::multiprecision::cpp_int max_column_bound(std::uint64_t rows,
                                                              std::uint64_t weight,
                                                              std::uint64_t overlap);

} // namespace bcs

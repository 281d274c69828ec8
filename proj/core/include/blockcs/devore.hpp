#pragma once

#include <cstdint>
#include <span>

#include "blockcs/block_matrix.hpp"

namespace bcs {

// Parameters of the polynomial base construction over the prime field Z_p:
// a p^2 x p^{r+1} binary matrix whose columns are the graphs of all
// polynomials of degree at most r.
struct DevoreParams {
    std::uint32_t p; // prime modulus (= block size = block count)
    std::uint32_t r; // maximum polynomial degree, 0 <= r < p

    friend bool operator==(const DevoreParams&, const DevoreParams&) = default;
};

[[nodiscard]] bool is_prime(std::uint64_t n);

// Horner evaluation of sum_i coeffs[i] * x^i over Z_p; coeffs[0] is the
// constant term. All residues must lie in {0..p-1}.
[[nodiscard]] std::uint32_t eval_poly(std::span<const std::uint32_t> coeffs, std::uint32_t x,
                                      std::uint32_t p);

// Base matrix generator. Block l holds the evaluations at x = l-1; the
// within-block position of the 1 is P(l-1) + 1. Columns are ordered by
// coefficient vector (a_r, ..., a_1, a_0), lexicographic with the
// highest-degree coefficient varying slowest. Two distinct polynomials of
// degree <= r agree on at most r points, so the declared overlap bound is r.
[[nodiscard]] BlockBinaryMatrix devore_matrix(const DevoreParams& params);

} // namespace bcs

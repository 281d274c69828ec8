#include "blockcs/devore.hpp"

#include <limits>
#include <string>
#include <vector>

namespace bcs {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t eval_poly(std::span<const std::uint32_t> coeffs, std::uint32_t x,
                        std::uint32_t p) {
    if (p < 2) throw ParameterError("modulus must be at least 2");
    if (x >= p) throw RangeError("evaluation point " + std::to_string(x) + " not in {0.." +
                                 std::to_string(p - 1) + "}");
    for (const std::uint32_t c : coeffs)
        if (c >= p)
            throw RangeError("coefficient " + std::to_string(c) + " not in {0.." +
                             std::to_string(p - 1) + "}");

    std::uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = (acc * x + *it) % p;
    return static_cast<std::uint32_t>(acc);
}

BlockBinaryMatrix devore_matrix(const DevoreParams& params) {
    const std::uint32_t p = params.p, r = params.r;
    if (!is_prime(p)) throw ParameterError("p must be prime (got " + std::to_string(p) + ")");
    if (r >= p)
        throw ParameterError("polynomial degree r must satisfy r < p (got r=" +
                             std::to_string(r) + ", p=" + std::to_string(p) + ")");

    std::uint64_t column_count = 1;
    for (std::uint32_t i = 0; i <= r; ++i) {
        column_count *= p;
        if (column_count > (std::numeric_limits<std::uint32_t>::max)() / p)
            throw ParameterError("p^(r+1) columns exceed the supported size");
    }

    std::vector<Index> entries;
    entries.reserve(column_count * p);
    std::vector<std::uint32_t> coeffs(r + 1, 0); // coeffs[i] multiplies x^i
    for (std::uint64_t c = 0; c < column_count; ++c) {
        std::uint64_t rest = c;
        for (std::uint32_t i = 0; i <= r; ++i) { // a_0 varies fastest
            coeffs[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        for (std::uint32_t x = 0; x < p; ++x)
            entries.push_back(eval_poly(coeffs, x, p) + 1);
    }

    return BlockBinaryMatrix(p, p, std::move(entries), r);
}

} // namespace bcs

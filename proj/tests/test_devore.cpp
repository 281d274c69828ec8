#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "blockcs/analysis.hpp"
#include "blockcs/devore.hpp"
#include "reference_fixtures.hpp"

using namespace bcs;

namespace {

// oracle: plain power-sum evaluation
std::uint32_t eval_naive(const std::vector<std::uint32_t>& coeffs, std::uint32_t x,
                         std::uint32_t p) {
    std::uint64_t acc = 0, pw = 1;
    for (const auto c : coeffs) {
        acc = (acc + c * pw) % p;
        pw = (pw * x) % p;
    }
    return static_cast<std::uint32_t>(acc);
}

} // namespace

TEST_CASE("primality check") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91)); // 7 * 13
}

TEST_CASE("polynomial evaluation") {
    const std::vector<std::uint32_t> c{1, 2}; // 1 + 2x
    CHECK(eval_poly(c, 2, 3) == 2);           // (1 + 4) mod 3
    CHECK(eval_poly(std::vector<std::uint32_t>{0, 0, 0}, 2, 5) == 0);
    CHECK(eval_poly(std::vector<std::uint32_t>{4}, 3, 5) == 4);
    CHECK_THROWS_AS((void)eval_poly(std::vector<std::uint32_t>{5}, 0, 5), RangeError);
    CHECK_THROWS_AS((void)eval_poly(std::vector<std::uint32_t>{1}, 5, 5), RangeError);
}

TEST_CASE("Horner evaluation matches the power-sum oracle exhaustively") {
    for (const std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (std::uint32_t degree = 0; degree <= 3; ++degree) {
            std::vector<std::uint32_t> coeffs(degree + 1, 0);
            // enumerate every coefficient vector
            const std::uint64_t total = [&] {
                std::uint64_t t = 1;
                for (std::uint32_t i = 0; i <= degree; ++i) t *= p;
                return t;
            }();
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                std::uint64_t rest = idx;
                for (auto& c : coeffs) {
                    c = static_cast<std::uint32_t>(rest % p);
                    rest /= p;
                }
                for (std::uint32_t x = 0; x < p; ++x)
                    REQUIRE(eval_poly(coeffs, x, p) == eval_naive(coeffs, x, p));
            }
        }
    }
}

TEST_CASE("p=2 r=1 reproduces the 4x4 reference tuple set") {
    const auto m = devore_matrix({2, 1});
    CHECK(m.entries() == fixtures::flatten(fixtures::kPsiTuples));
    CHECK(m.block_size() == 2);
    CHECK(m.block_count() == 2);
    CHECK(m.overlap_bound() == 1);
}

TEST_CASE("p=3 r=1 reproduces the 9x9 reference tuple set") {
    const auto m = devore_matrix({3, 1});
    CHECK(m.entries() == fixtures::flatten(fixtures::kPsiPrimeTuples));
}

TEST_CASE("degree zero gives the constant polynomials") {
    const auto m = devore_matrix({2, 0});
    CHECK(m.entries() == std::vector<Index>{1, 1, 2, 2});
    CHECK(m.overlap_bound() == 0);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((void)devore_matrix({4, 1}), ParameterError);
    CHECK_THROWS_AS((void)devore_matrix({1, 0}), ParameterError);
    CHECK_THROWS_AS((void)devore_matrix({3, 3}), ParameterError);
    CHECK_THROWS_AS((void)devore_matrix({5, 7}), ParameterError);
}

TEST_CASE("column count, weight, distinctness and density for all small fields") {
    for (const std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (std::uint32_t r = 0; r < p; ++r) {
            const auto m = devore_matrix({p, r});
            std::uint64_t expect_cols = 1;
            for (std::uint32_t i = 0; i <= r; ++i) expect_cols *= p;
            REQUIRE(m.column_count() == expect_cols); // constructor enforces distinctness
            REQUIRE(m.block_size() == p);
            REQUIRE(m.block_count() == p);
            REQUIRE(density(m) == Rational(1, p));
        }
    }
}

TEST_CASE("brute-force overlap stays within the degree") {
    for (const std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (std::uint32_t r = 1; r < p && r <= 2; ++r) {
            const auto m = devore_matrix({p, r});
            const Index actual = max_overlap(m);
            CHECK(actual <= r);
            // two polynomials differing by a degree-r product of linear
            // factors agree on exactly r points, so the bound is tight
            CHECK(actual == r);
        }
    }
}

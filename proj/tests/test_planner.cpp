#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "blockcs/analysis.hpp"
#include "blockcs/planner.hpp"
#include "blockcs/ternary.hpp"

using namespace bcs;

TEST_CASE("factorization") {
    CHECK(factorize(60) == std::vector<std::uint64_t>{2, 2, 3, 5});
    CHECK(factorize(27) == std::vector<std::uint64_t>{3, 3, 3});
    CHECK(factorize(97) == std::vector<std::uint64_t>{97});
    CHECK(factorize(2) == std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS((void)factorize(1), ParameterError);
    CHECK_THROWS_AS((void)factorize(0), ParameterError);
}

TEST_CASE("plan for 60 rows") {
    const auto plan = plan_row_size(60);
    CHECK(plan.retained_blocks == 2);
    CHECK(plan.bases == std::vector<DevoreParams>{{2, 1}, {3, 1}, {5, 1}});
    CHECK(plan.predicted_rows == 60);
    CHECK(plan.predicted_cols == 900);
    CHECK(plan.coherence_bound == Rational(1, 2));
}

TEST_CASE("plan for a prime power") {
    const auto p8 = plan_row_size(8);
    CHECK(p8.retained_blocks == 2);
    CHECK(p8.bases == std::vector<DevoreParams>{{2, 1}, {2, 1}});
    CHECK(p8.predicted_cols == 16);

    const auto p27 = plan_row_size(27);
    CHECK(p27.retained_blocks == 3);
    CHECK(p27.bases == std::vector<DevoreParams>{{3, 1}, {3, 1}});
    CHECK(p27.predicted_rows == 27);
}

TEST_CASE("excluded row sizes name the exclusion") {
    const auto expect_not_covered = [](std::uint64_t m, const char* needle) {
        try {
            (void)plan_row_size(m);
            FAIL(("plan_row_size(" + std::to_string(m) + ") should have thrown").c_str());
        } catch (const NotCoveredError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("different from p, p^2, pq") != std::string::npos);
            CHECK(msg.find(needle) != std::string::npos);
        }
    };
    expect_not_covered(15, "two distinct primes");
    expect_not_covered(97, "prime");
    expect_not_covered(49, "p^2 rows"); // points at the direct base construction
    expect_not_covered(1, "no prime factors");
}

TEST_CASE("plan determinism") {
    const auto a = plan_row_size(360);
    const auto b = plan_row_size(360);
    CHECK(a.bases == b.bases);
    CHECK(a.retained_blocks == b.retained_blocks);
    CHECK(describe(a) == describe(b));
}

TEST_CASE("base degree validation") {
    CHECK_THROWS_AS((void)plan_row_size(60, 0), ParameterError);
    CHECK_THROWS_AS((void)plan_row_size(60, 2), ParameterError); // degree must stay below k = 2
    const auto plan = plan_row_size(27 * 5, 2);             // k = 3 allows degree 2
    CHECK(plan.coherence_bound == Rational(2, 3));
}

TEST_CASE("executing the 60-row plan") {
    const auto m = execute_plan(plan_row_size(60));
    CHECK(m.row_count() == 60);
    CHECK(m.column_count() == 900);
    CHECK(m.block_count() == 2);
    CHECK(max_overlap(m) == 1);
    CHECK(coherence(m) == Rational(1, 2));
}

TEST_CASE("executing the 8-row plan gives density 1/4") {
    const auto m = execute_plan(plan_row_size(8));
    CHECK(m.row_count() == 8);
    CHECK(m.column_count() == 16);
    CHECK(density(m) == Rational(1, 4));
    // 2 ones per column, 16 columns, 128 cells
    std::size_t ones = 0;
    for (const auto v : m.dense()) ones += v;
    CHECK(ones == 32);
}

TEST_CASE("sign-flipping an executed plan keeps its coherence") {
    const auto m = execute_plan(plan_row_size(45)); // 3^2 * 5
    const auto t = sign_flip(m);
    CHECK(coherence(t) == coherence(m));
    CHECK(t.row_count() == 45);
}

TEST_CASE("executed plans match predictions over a small sweep") {
    for (std::uint64_t m = 2; m <= 120; ++m) {
        const auto factors = factorize(m);
        if (factors.size() < 3) continue;
        const auto plan = plan_row_size(m);
        const auto built = execute_plan(plan);
        REQUIRE(built.row_count() == m);
        REQUIRE(built.column_count() == plan.predicted_cols);
        REQUIRE(coherence(built) <= plan.coherence_bound);
    }
}

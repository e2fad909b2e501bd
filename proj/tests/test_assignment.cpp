#include <doctest.h>

#include <random>

#include "kronstab/assignment.hpp"
#include "kronstab/errors.hpp"
#include "oracles.hpp"

using namespace kronstab;

TEST_SUITE("assignment") {

TEST_CASE("small cases") {
    CHECK(max_assignment({})->value == 0);
    const ProfitMatrix p = {{3, 1}, {2, 5}};
    const auto a = max_assignment(p);
    REQUIRE(a);
    CHECK(a->value == 8);
    CHECK(a->column_of_row == std::vector<int>{0, 1});
    const ProfitMatrix blocked = {{std::nullopt, std::nullopt}, {1, 2}};
    CHECK_FALSE(max_assignment(blocked));
    CHECK_THROWS_AS(max_assignment({{1}, {2}}), DomainError);
    CHECK_THROWS_AS(max_assignment({{1, 2}, {2}}), DomainError);
}

TEST_CASE("matches exhaustive search") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t rows = 1 + rng() % 5, cols = rows + rng() % 3;
        ProfitMatrix p(rows, std::vector<std::optional<long long>>(cols));
        for (auto &row : p)
            for (auto &cell : row)
                if (rng() % 4)
                    cell = static_cast<long long>(rng() % 41) - 20;
        const auto expected = oracle::brute_assignment(p);
        const auto got = max_assignment(p);
        REQUIRE(got.has_value() == expected.has_value());
        if (!got)
            continue;
        CHECK(got->value == *expected);
        std::vector<char> used(cols, 0);
        long long total = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            const auto j = static_cast<std::size_t>(got->column_of_row[i]);
            CHECK_FALSE(used[j]);
            used[j] = 1;
            REQUIRE(p[i][j]);
            total += *p[i][j];
        }
        CHECK(total == got->value);
    }
}

}

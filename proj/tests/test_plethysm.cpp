#include <doctest.h>

#include <random>

#include "kronstab/errors.hpp"
#include "kronstab/plethysm.hpp"
#include "oracles.hpp"

using namespace kronstab;

namespace {

SymFunc ps(std::initializer_list<std::pair<Partition, mpq_class>> terms) {
    SymFunc f;
    for (const auto &[p, c] : terms)
        f.add(p, c);
    return f;
}

}

TEST_SUITE("plethysm") {

TEST_CASE("Schur to power sums") {
    CHECK(schur_to_powersum(Partition{1}) == ps({{Partition{1}, 1}}));
    CHECK(schur_to_powersum(Partition{2}) == ps({{Partition{1, 1}, mpq_class(1, 2)}, {Partition{2}, mpq_class(1, 2)}}));
    CHECK(schur_to_powersum(Partition{1, 1}) ==
          ps({{Partition{1, 1}, mpq_class(1, 2)}, {Partition{2}, mpq_class(-1, 2)}}));
}

TEST_CASE("power-sum plethysm rules") {
    CHECK(plethysm_powersum(power_sum(Partition{2}), power_sum(Partition{3})) == power_sum(Partition{6}));
    const SymFunc h2 = schur_to_powersum(Partition{2});
    CHECK(plethysm_powersum(power_sum(Partition{1}), h2) == h2);
    CHECK(plethysm_powersum(power_sum(Partition{2}), h2) ==
          ps({{Partition{2, 2}, mpq_class(1, 2)}, {Partition{4}, mpq_class(1, 2)}}));
    CHECK(plethysm_powersum(h2, power_sum(Partition{1})) == h2);
    CHECK_THROWS_AS(plethysm_powersum(SymFunc(Basis::Schur), h2), DomainError);
    CHECK(plethysm_powersum(h2, power_sum(Partition{2})).degree() == 4);
}

TEST_CASE("symmetric function bookkeeping") {
    SymFunc f;
    CHECK(f.is_zero());
    f.add(Partition{2}, 1);
    f.add(Partition{2}, -1);
    CHECK(f.is_zero());
    CHECK_THROWS_AS(f.degree(), DomainError);
    f.add(Partition{2}, 1);
    f.add(Partition{1}, 1);
    CHECK_THROWS_AS(f.degree(), DomainError);
    CHECK(f.coeff(Partition{3}) == 0);
    CHECK(multiply(power_sum(Partition{2}), power_sum(Partition{2, 1})) == power_sum(Partition{2, 2, 1}));
}

TEST_CASE("associativity on sampled elements") {
    std::mt19937 rng(5);
    auto random_element = [&](int degree) {
        SymFunc f;
        const auto shapes = partitions_of(degree);
        for (int t = 0; t < 3; ++t)
            f.add(shapes[rng() % shapes.size()], mpq_class(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3)));
        if (f.is_zero())
            f.add(shapes.front(), 1);
        return f;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const SymFunc f = random_element(1 + static_cast<int>(rng() % 3));
        const SymFunc g = random_element(1 + static_cast<int>(rng() % 3));
        const SymFunc h = random_element(1 + static_cast<int>(rng() % 3));
        CHECK(plethysm_powersum(plethysm_powersum(f, g), h) == plethysm_powersum(f, plethysm_powersum(g, h)));
    }
}

TEST_CASE("basis round trip") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition &l : partitions_of(n)) {
            SymFunc s(Basis::Schur);
            s.add(l, 1);
            CHECK(powersum_to_schur(schur_to_powersum(l)) == s);
        }
}

TEST_CASE("coefficient examples") {
    CHECK(plethysm_coeff(Partition{2}, Partition{2, 1}, Partition{4, 2}) == 1);
    CHECK(plethysm_coeff(Partition{2}, Partition{1, 1}, Partition{4}) == 0);
    CHECK(plethysm_coeff(Partition{2}, Partition{2}, Partition{4}) == 1);
    CHECK(plethysm_coeff(Partition{2}, Partition{2}, Partition{2, 2}) == 1);
    CHECK(plethysm_coeff(Partition{2}, Partition{2}, Partition{3, 1}) == 0);
    CHECK(plethysm_coeff(Partition{2}, Partition{2}, Partition{3}) == 0);
    CHECK_THROWS_AS(plethysm_schur(Partition{5}, Partition{5}), LimitError);
}

TEST_CASE("diagonal-matrix oracle") {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; a * b <= 6; ++b)
            for (const Partition &l : partitions_of(a))
                for (const Partition &m : partitions_of(b)) {
                    const auto expected = oracle::diagonal_plethysm(l, m);
                    const auto got = plethysm_schur(l, m);
                    CHECK(got.size() == expected.size());
                    for (const auto &[nu, c] : expected)
                        CHECK(plethysm_coeff(l, m, nu) == c);
                }
}

TEST_CASE("dimension consistency") {
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; a * b <= 8; ++b)
            for (const Partition &l : partitions_of(a))
                for (const Partition &m : partitions_of(b)) {
                    mpz_class sum = 0;
                    for (const auto &[nu, c] : plethysm_schur(l, m)) {
                        CHECK(c > 0);
                        sum += c * dim_gl(nu, 3);
                    }
                    const mpz_class inner = dim_gl(m, 3);
                    CHECK(sum == dim_gl(l, static_cast<int>(inner.get_si())));
                }
}

TEST_CASE("one-row outer plethysm families") {
    for (int size = 1; size <= 4; ++size)
        for (const Partition &m : partitions_of(size))
            for (int d = 1; d <= 3; ++d) {
                CHECK(plethysm_coeff(Partition{d}, m, scale(m, d)) == 1);
                if (m.length() >= 2)
                    CHECK(plethysm_coeff(Partition{d}, m, Partition{d * size}) == 0);
            }
}

}

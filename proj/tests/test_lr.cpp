#include <doctest.h>

#include "kronstab/lr.hpp"
#include "oracles.hpp"

using namespace kronstab;

TEST_SUITE("lr") {

TEST_CASE("examples") {
    CHECK(lr(Partition{3}, Partition{3}, Partition{6}) == 1);
    CHECK(lr(Partition{2, 1}, Partition{}, Partition{2, 1}) == 1);
    CHECK(lr(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    CHECK(lr(Partition{2, 1}, Partition{1}, Partition{4}) == 0);
    CHECK(lr(Partition{2, 1}, Partition{1}, Partition{2, 1}) == 0);
}

TEST_CASE("product expansion examples") {
    using M = std::map<Partition, mpz_class>;
    CHECK(schur_product_expand(Partition{1}, Partition{1}) == M{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(schur_product_expand(Partition{}, Partition{3, 1}) == M{{Partition{3, 1}, 1}});
    CHECK(schur_product_expand(Partition{2}, Partition{2}) ==
          M{{Partition{4}, 1}, {Partition{3, 1}, 1}, {Partition{2, 2}, 1}});
}

TEST_CASE("symmetry and agreement with the product expansion") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition &nu : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition &l : partitions_of(k))
                    for (const Partition &m : partitions_of(n - k)) {
                        const mpz_class c = lr(l, m, nu);
                        CHECK(lr(m, l, nu) == c);
                        const auto e = schur_product_expand(l, m);
                        const auto it = e.find(nu);
                        CHECK((it == e.end() ? mpz_class(0) : it->second) == c);
                    }
}

TEST_CASE("Pieri rule") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition &nu : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition &l : partitions_of(n - k))
                    CHECK(lr(l, Partition(k ? std::vector<int>{k} : std::vector<int>{}), nu) == oracle::pieri(l, k, nu));
}

TEST_CASE("Schur polynomial oracle") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 6; ++b)
            for (const Partition &l : partitions_of(a))
                for (const Partition &m : partitions_of(b))
                    for (const Partition &nu : partitions_of(a + b))
                        CHECK(lr(l, m, nu) == oracle::poly_lr(l, m, nu));
}

TEST_CASE("dimension identity") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b <= 6; ++b)
            for (const Partition &l : partitions_of(a))
                for (const Partition &m : partitions_of(b)) {
                    mpz_class sum = 0;
                    for (const auto &[nu, c] : schur_product_expand(l, m))
                        sum += c * dim_gl(nu, 4);
                    CHECK(sum == dim_gl(l, 4) * dim_gl(m, 4));
                }
}

TEST_CASE("two-row target") {
    for (int d = 1; d <= 5; ++d)
        for (const Partition &l : partitions_of(d))
            for (const Partition &m : partitions_of(d))
                CHECK(lr(l, m, Partition{2 * d}) == (l == Partition{d} && m == Partition{d} ? 1 : 0));
}

}

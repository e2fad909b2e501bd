#include "kronstab/kronecker.hpp"

#include "kronstab/errors.hpp"
#include "parallel.hpp"

namespace kronstab {

namespace {

void check_sizes(const Partition &a, const Partition &b, const Partition &c) {
    if (a.size() != b.size() || b.size() != c.size())
        throw DomainError("Kronecker coefficient needs partitions of equal size, got " + std::to_string(a.size()) +
                          ", " + std::to_string(b.size()) + ", " + std::to_string(c.size()));
}

// Adds |class| * chi_a chi_b chi_c to `acc`; stops at the first vanishing
// character.
void accumulate(mpz_class &acc, const Partition &a, const Partition &b, const Partition &c, const Partition &rho,
                CharacterCache &cache) {
    const CharValue xa = cache.value(a, rho);
    if (xa == 0)
        return;
    const CharValue xb = cache.value(b, rho);
    if (xb == 0)
        return;
    const CharValue xc = cache.value(c, rho);
    if (xc == 0)
        return;
    acc += class_size(rho) * to_mpz(xa) * to_mpz(xb) * to_mpz(xc);
}

mpz_class finish(const mpz_class &sum, int n) {
    const mpz_class order = factorial(n);
    if (sum % order != 0)
        throw ConsistencyError("Kronecker class sum " + sum.get_str() + " not divisible by " + order.get_str());
    mpz_class g = sum / order;
    if (g < 0)
        throw ConsistencyError("negative Kronecker coefficient " + g.get_str());
    return g;
}

} // namespace

mpz_class kron_with_cache(const Partition &alpha, const Partition &beta, const Partition &gamma,
                          CharacterCache &cache, bool parallel) {
    check_sizes(alpha, beta, gamma);
    const int n = alpha.size();
    const std::vector<Partition> classes = partitions_of(n);
    mpz_class sum = 0;
    if (!parallel) {
        for (const Partition &rho : classes)
            accumulate(sum, alpha, beta, gamma, rho, cache);
        return finish(sum, n);
    }
    std::vector<mpz_class> partial(classes.size());
    detail::parallel_for(
        static_cast<std::int64_t>(classes.size()),
        [&](std::int64_t i) {
            const auto k = static_cast<std::size_t>(i);
            accumulate(partial[k], alpha, beta, gamma, classes[k], cache);
        },
        8);
    for (const mpz_class &p : partial)
        sum += p;
    return finish(sum, n);
}

mpz_class kron(const Partition &alpha, const Partition &beta, const Partition &gamma) {
    check_sizes(alpha, beta, gamma);
    return kron_with_cache(alpha, beta, gamma, *character_cache(alpha.size()), true);
}

mpz_class kron_serial(const Partition &alpha, const Partition &beta, const Partition &gamma) {
    check_sizes(alpha, beta, gamma);
    CharacterCache cache(alpha.size());
    return kron_with_cache(alpha, beta, gamma, cache, false);
}

WeakStabilityProbe weak_stability_probe(const Partition &alpha, const Partition &beta, const Partition &gamma,
                                        int horizon) {
    check_sizes(alpha, beta, gamma);
    if (horizon < 1)
        throw DomainError("probe horizon must be positive");
    WeakStabilityProbe result;
    for (int d = 1; d <= horizon; ++d) {
        mpz_class g = kron(scale(alpha, d), scale(beta, d), scale(gamma, d));
        if (g != 1) {
            result.stable = false;
            result.failing_d = d;
            result.failing_value = g;
            return result;
        }
    }
    return result;
}

} // namespace kronstab

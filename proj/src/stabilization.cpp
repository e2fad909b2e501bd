#include "kronstab/stabilization.hpp"

#include "kronstab/errors.hpp"
#include "kronstab/kronecker.hpp"
#include "parallel.hpp"

namespace kronstab {

namespace {

void check_sizes(const StabilizationQuery &q) {
    if (q.lambda.size() != q.mu.size() || q.mu.size() != q.nu.size())
        throw DomainError("base partitions must have equal sizes");
    const Direction &t = q.direction;
    if (t.alpha.size() != t.beta.size() || t.beta.size() != t.gamma.size())
        throw DomainError("direction partitions must have equal sizes");
    if (q.certified_bound < 0 || q.margin < 0)
        throw DomainError("bound and margin must be non-negative");
}

} // namespace

StabilizationQuery certified_query(const TripleQuery &q, int margin) {
    const BoundReport r = bound_report(q);
    StabilizationQuery s;
    s.lambda = q.lambda;
    s.mu = q.mu;
    s.nu = q.nu;
    s.direction = family_direction(q.family);
    s.certified_bound = r.certificate();
    s.margin = margin;
    s.certificate = (q.family == Family::Murnaghan ? "D1 = " : "D2 = ") + std::to_string(s.certified_bound);
    return s;
}

StabilizationQuery empirical_query(const Partition &lambda, const Partition &mu, const Partition &nu,
                                   const Direction &direction, int horizon) {
    StabilizationQuery s{lambda, mu, nu, direction, horizon, 0, false, {}};
    s.certificate = "empirical (horizon " + std::to_string(horizon) + ")";
    return s;
}

mpz_class sequence_term(const StabilizationQuery &q, int d) {
    check_sizes(q);
    if (d < 0)
        throw DomainError("sequence index must be non-negative");
    return kron(add_scaled(q.lambda, d, q.direction.alpha), add_scaled(q.mu, d, q.direction.beta),
                add_scaled(q.nu, d, q.direction.gamma));
}

std::vector<mpz_class> sequence_terms(const StabilizationQuery &q, int horizon) {
    check_sizes(q);
    std::vector<mpz_class> out(static_cast<std::size_t>(horizon) + 1);
    // Largest degrees first so the slowest terms start early.
    detail::parallel_for(horizon + 1, [&](std::int64_t i) {
        const int d = horizon - static_cast<int>(i);
        out[static_cast<std::size_t>(d)] = sequence_term(q, d);
    });
    return out;
}

StabilizationResult d_real(const StabilizationQuery &q) {
    check_sizes(q);
    const int bound = q.certified_bound;
    const int horizon = bound + q.margin;
    StabilizationResult r;
    r.sequence = sequence_terms(q, horizon);
    r.limit = r.sequence[static_cast<std::size_t>(bound)];
    r.empirical = !q.certified;
    r.certificate = q.certificate;
    for (int d = bound + 1; d <= horizon; ++d)
        if (r.sequence[static_cast<std::size_t>(d)] != r.limit)
            throw CertificateViolation("sequence changes at d = " + std::to_string(d) + " after the bound " +
                                       std::to_string(bound) + " (" + q.certificate + ")");
    r.d_real = bound;
    while (r.d_real > 0 && r.sequence[static_cast<std::size_t>(r.d_real) - 1] == r.limit)
        --r.d_real;
    return r;
}

} // namespace kronstab

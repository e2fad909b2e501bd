#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "kronstab/gitbounds.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

struct StabilizationQuery {
    Partition lambda, mu, nu;
    Direction direction;
    /// Index from which the sequence is known to be constant. When
    /// `certified` is false it is only the end of an exploration window.
    int certified_bound = 0;
    int margin = 2;
    bool certified = true;
    std::string certificate;
};

struct StabilizationResult {
    int d_real = 0;
    mpz_class limit;
    /// Values for d = 0..horizon.
    std::vector<mpz_class> sequence;
    std::string certificate;
    bool empirical = false;

    int horizon() const { return static_cast<int>(sequence.size()) - 1; }
};

/// Query certified by the family bound of `q` (D1 or D2).
StabilizationQuery certified_query(const TripleQuery &q, int margin = 2);

/// Query along a user-supplied direction, explored up to `horizon`.
StabilizationQuery empirical_query(const Partition &lambda, const Partition &mu, const Partition &nu,
                                   const Direction &direction, int horizon);

/// g at (lambda + d alpha, mu + d beta, nu + d gamma).
mpz_class sequence_term(const StabilizationQuery &q, int d);

/// Terms for d = 0..horizon, evaluated in parallel over d.
std::vector<mpz_class> sequence_terms(const StabilizationQuery &q, int horizon);

/// Least d from which the sequence is constant, with the limit read at the
/// certified bound. Throws CertificateViolation when the sequence moves
/// between the bound and bound + margin.
StabilizationResult d_real(const StabilizationQuery &q);

} // namespace kronstab

#pragma once

#include <optional>

#include <gmpxx.h>

#include "kronstab/characters.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

/// Kronecker coefficient g_{alpha,beta,gamma}: multiplicity of the
/// irreducible gamma in alpha (x) beta. Class sum over cycle types with
/// classes skipped as soon as one character vanishes; classes are spread
/// over OpenMP threads and each thread keeps its own exact partial sum.
mpz_class kron(const Partition &alpha, const Partition &beta, const Partition &gamma);

/// Same class sum evaluated on one thread, in class order.
mpz_class kron_serial(const Partition &alpha, const Partition &beta, const Partition &gamma);

/// Class sum against an explicit cache; used by callers that manage cache
/// lifetime themselves.
mpz_class kron_with_cache(const Partition &alpha, const Partition &beta, const Partition &gamma,
                          CharacterCache &cache, bool parallel);

struct WeakStabilityProbe {
    bool stable = true;
    int failing_d = 0;
    mpz_class failing_value;
};

/// Checks g_{d alpha, d beta, d gamma} = 1 for d = 1..horizon. A finite
/// probe only: a true result says nothing about d > horizon.
WeakStabilityProbe weak_stability_probe(const Partition &alpha, const Partition &beta, const Partition &gamma,
                                        int horizon);

} // namespace kronstab

#pragma once

#include <gmpxx.h>

#include "kronstab/partition.hpp"

namespace kronstab {

inline constexpr int kMaxHyperoctSize = 12;

/// Multiplicity of the irreducible gamma of the hyperoctahedral group
/// W_n = (Z/2)^n x| S_n in alpha (x) beta. Irreducibles are indexed by
/// double partitions (plus, minus) with |plus| + |minus| = n.
///
/// Computed by branching GL(V1 (x) V2) with V_i = V_i+ (+) V_i-:
/// gamma+ lives on V1+ (x) V2+ (+) V1- (x) V2- and gamma- on
/// V1+ (x) V2- (+) V1- (x) V2+. Each summand splits by Kronecker
/// coefficients, and the pieces recombine through Littlewood-Richardson
/// coefficients into alpha on V1 and beta on V2.
///
/// Returns 0 for unequal total sizes; LimitError above kMaxHyperoctSize.
mpz_class hyperoct_coeff(const DoublePartition &alpha, const DoublePartition &beta, const DoublePartition &gamma);

/// C(n, |alpha+|) f^{alpha+} f^{alpha-}.
mpz_class dim_wreath(const DoublePartition &alpha);

} // namespace kronstab

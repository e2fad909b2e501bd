#pragma once

#include <map>

#include <gmpxx.h>

#include "kronstab/partition.hpp"

namespace kronstab {

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of
/// semistandard fillings of nu/lambda with content mu whose reverse
/// reading word is a lattice word. Zero when sizes or containment fail.
mpz_class lr(const Partition &lambda, const Partition &mu, const Partition &nu);

/// Every nu with c^nu_{lambda,mu} > 0, built by adding mu_1 ones, then
/// mu_2 twos, ... to lambda as horizontal strips under the lattice
/// condition.
std::map<Partition, mpz_class> schur_product_expand(const Partition &lambda, const Partition &mu);

} // namespace kronstab

#pragma once

// Slow reference implementations used only by the tests. None of them
// shares an algorithm with the library: characters come from the
// alternant formula or from permutation modules, products from explicit
// polynomials, group sums from enumerating every group element.

#include <map>
#include <optional>
#include <vector>

#include "kronstab/assignment.hpp"
#include "kronstab/partition.hpp"

namespace oracle {

using kronstab::DoublePartition;
using kronstab::Partition;

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, long>;

/// Character from the coefficient of x^(lambda + delta) in a_delta p_rho.
long frobenius_character(const Partition &lambda, const Partition &rho);

/// Every permutation of {0..n-1}.
std::vector<std::vector<int>> permutations(int n);
Partition cycle_type(const std::vector<int> &perm);

/// Irreducible characters of S_n as functions of cycle type, obtained by
/// peeling permutation-module characters (fixed tabloids) with Kostka
/// numbers counted from tableaux.
class ModuleCharacters {
  public:
    explicit ModuleCharacters(int n);
    long value(const Partition &lambda, const Partition &rho) const;

  private:
    std::map<Partition, std::map<Partition, long>> table_;
};

/// (1/n!) sum over all permutations of chi_a chi_b chi_c, n <= 5.
long group_kron(const Partition &a, const Partition &b, const Partition &c);

/// Schur polynomial in k variables from semistandard tableaux.
Poly schur_poly(const Partition &lambda, int k);
Poly poly_mul(const Poly &f, const Poly &g);
/// Schur expansion of a symmetric polynomial in k variables by repeatedly
/// removing the leading monomial.
std::map<Partition, long> schur_expand(Poly f, int k);

/// c^nu_{lambda,mu} from the product of Schur polynomials.
long poly_lr(const Partition &lambda, const Partition &mu, const Partition &nu);
/// Pieri rule: 1 when nu / lambda is a horizontal strip of size k.
long pieri(const Partition &lambda, int k, const Partition &nu);

/// Plethysm s_lambda[s_mu] in |lambda||mu| variables: s_lambda evaluated
/// at the eigenvalues of a diagonal matrix on S^mu.
std::map<Partition, long> diagonal_plethysm(const Partition &lambda, const Partition &mu);

/// Characters of the hyperoctahedral group B_n by induction from
/// B_k x B_(n-k), with the sign character on the second block; the
/// coefficient is a sum over all 2^n n! signed permutations. n <= 3.
long wreath_coeff(const DoublePartition &a, const DoublePartition &b, const DoublePartition &c);

/// Maximum over every injective row-to-column map.
std::optional<long> brute_assignment(const kronstab::ProfitMatrix &profit);

} // namespace oracle

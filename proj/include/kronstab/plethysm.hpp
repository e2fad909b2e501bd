#pragma once

#include <map>

#include <gmpxx.h>

#include "kronstab/partition.hpp"

namespace kronstab {

enum class Basis { PowerSum, Schur };

/// Finite linear combination of basis elements indexed by partitions,
/// with rational coefficients. Zero coefficients are never stored.
class SymFunc {
  public:
    explicit SymFunc(Basis basis = Basis::PowerSum) : basis_(basis) {}

    Basis basis() const noexcept { return basis_; }
    const std::map<Partition, mpq_class> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of the basis element, 0 if absent.
    mpq_class coeff(const Partition &p) const;

    void add(const Partition &p, const mpq_class &c);

    /// Degree of a homogeneous element; DomainError otherwise (or if zero).
    int degree() const;

    friend bool operator==(const SymFunc &, const SymFunc &) = default;

  private:
    Basis basis_;
    std::map<Partition, mpq_class> terms_;
};

/// p_rho as a one-term power-sum element.
SymFunc power_sum(const Partition &rho);

/// s_lambda = sum_rho chi_lambda(rho)/z(rho) p_rho.
SymFunc schur_to_powersum(const Partition &lambda);

/// Schur expansion of a power-sum element, using <p_rho, s_nu> = chi_nu(rho).
SymFunc powersum_to_schur(const SymFunc &f);

/// Product in the power-sum basis: p_rho p_sigma = p_{rho u sigma}.
SymFunc multiply(const SymFunc &f, const SymFunc &g);

/// f o g with p_k o p_sigma = p_{k sigma}, multiplicative and linear in f
/// over the rationals. Both arguments in the power-sum basis.
SymFunc plethysm_powersum(const SymFunc &f, const SymFunc &g);

inline constexpr int kMaxPlethysmDegree = 24;

/// Schur expansion of s_lambda o s_mu. LimitError when
/// |lambda| |mu| > kMaxPlethysmDegree.
std::map<Partition, mpz_class> plethysm_schur(const Partition &lambda, const Partition &mu);

/// Multiplicity of S^nu in S^lambda(S^mu(V)).
mpz_class plethysm_coeff(const Partition &lambda, const Partition &mu, const Partition &nu);

} // namespace kronstab

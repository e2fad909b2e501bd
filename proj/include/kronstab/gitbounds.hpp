#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kronstab/partition.hpp"

namespace kronstab {

/// Direction of growth: murnaghan = ((1),(1),(1)), squares = ((1,1),(1,1),(2)).
enum class Family { Murnaghan, Squares };

std::string family_name(Family f);
Family parse_family(const std::string &name);

/// The growth direction (alpha, beta, gamma) of a family.
struct Direction {
    Partition alpha, beta, gamma;
};
Direction family_direction(Family f);

struct TripleQuery {
    Partition lambda, mu, nu;
    Family family = Family::Murnaghan;
};

/// First index from which a sequence is constant when all d > num/den are
/// known to be stable: ceil(num/den), clamped below at 0.
int stable_from(long long num, long long den);

/// Bound from the tau_0 destabilization of the murnaghan family. With
/// `minimize_over_orderings`, the least value over the orderings of the
/// triple whose first two partitions have length >= 2. Throws
/// DegenerateTriple when no such ordering exists.
int bound_D1(const TripleQuery &q, bool minimize_over_orderings);

/// Squares-family bound; branch chosen by the lengths of lambda and mu.
int bound_D2(const TripleQuery &q, bool minimize_over_swap);

/// Converted Brion bound |mu| - lambda_1 - mu_1 + nu_2.
int bound_DB(const TripleQuery &q, bool minimize_over_nu_choice);

/// Brion bound on the complete flag variety of V1 (x) V2, minimized over
/// which partition plays nu.
int bound_DB_improved(const TripleQuery &q);

/// Converted second Briand-Orellana-Rosas bound.
int bound_DBOR2(const TripleQuery &q);

/// min(D_BOR2, tau_BOR2 bound on the complete flag variety), the latter
/// minimized over the six orderings.
int bound_DBOR2_improved(const TripleQuery &q);

/// min(D1 over orderings, DB improved, DBOR2 improved).
int bound_Dm(const TripleQuery &q);

/// Murnaghan-type bound for the hyperoctahedral coefficients, growing the
/// first part of each plus partition. Needs length >= 2 for lambda+ and mu+.
int bound_hyperoct(const DoublePartition &lambda, const DoublePartition &mu, const DoublePartition &nu);

/// Raw numerators (before halving and rounding) of the closed forms for a
/// fixed ordering. Exposed for cross-checks against the generic maximizer.
long long d1_numerator(const Partition &lambda, const Partition &mu, const Partition &nu);
long long db_improved_numerator(const Partition &lambda, const Partition &mu, const Partition &nu);
long long dbor2_improved_numerator(const Partition &lambda, const Partition &mu, const Partition &nu);
long long d2_numerator(const Partition &lambda, const Partition &mu, const Partition &nu);

/// One flag-variety factor of a Hilbert-Mumford computation. Position k
/// (1-based) of the flag receives one torus weight w(k); the factor
/// contributes sum_k c_k w(k) to -mu, where c_k = -objective_k for ordinary
/// factors and c_k = objective_{N+1-k} for dual ones (N = dimension).
struct FlagFactor {
    std::string name;
    Partition objective;
    bool dual = false;
    /// (weight, multiplicity); multiplicities sum to the dimension.
    std::vector<std::pair<int, int>> weights;
    /// (position, weight) assignments fixed by the base point.
    std::vector<std::pair<int, int>> pinned;
    /// When set, the last position may only take one of `last_weights`.
    bool excluded_last = false;
    std::vector<int> last_weights;

    int dimension() const;
};

struct WeightScenario {
    std::string name;
    std::vector<FlagFactor> factors;
    /// mu of the pulled-back ample bundle at the base point.
    int mu_Lbar = 1;
};

/// max over admissible placements of weights of sum over factors of the
/// factor contribution, i.e. max(-mu^M). Throws ScenarioError when the
/// constraints cannot be met.
long long hm_max_destabilization(const std::vector<FlagFactor> &factors);

/// stable_from(hm_max_destabilization(factors), mu_Lbar).
int hm_bound(const std::vector<FlagFactor> &factors, int mu_Lbar);
int hm_bound(const WeightScenario &s);

/// Tensor-product scenario: V1 with weights a (objective lambda), V2 with
/// weights b (objective mu), dual V1 (x) V2 with weights a_i + b_j
/// (objective nu) whose last slot is reserved for the weight of the
/// invariant form. pins1/pins2 list 1-based basis indices placed first.
WeightScenario tensor_scenario(std::string name, const Partition &lambda, const Partition &mu, const Partition &nu,
                               const std::vector<int> &a, const std::vector<int> &b, const std::vector<int> &pins1,
                               const std::vector<int> &pins2, int gamma_size);

WeightScenario tau0_murnaghan(const Partition &lambda, const Partition &mu, const Partition &nu);
WeightScenario tau_B(const Partition &lambda, const Partition &mu, const Partition &nu);
WeightScenario tau_BOR2(const Partition &lambda, const Partition &mu, const Partition &nu);
WeightScenario tau1_squares(const Partition &lambda, const Partition &mu, const Partition &nu);
WeightScenario tau2_squares(const Partition &lambda, const Partition &mu, const Partition &nu);
WeightScenario tau0_hyperoct(const DoublePartition &lambda, const DoublePartition &mu, const DoublePartition &nu);

/// max over {tau1, tau2} of hm_bound.
int hm_bound_squares(const Partition &lambda, const Partition &mu, const Partition &nu);

struct BoundReport {
    Family family = Family::Murnaghan;
    Partition lambda, mu, nu;
    std::optional<int> D1;        // over orderings
    std::optional<int> D1_fixed;  // given ordering
    std::optional<int> D2;        // squares, best of lambda/mu swap
    std::optional<int> D2_fixed;
    std::optional<int> DB;
    std::optional<int> DB_improved;
    std::optional<int> DBOR2;
    std::optional<int> DBOR2_improved;
    std::optional<int> Dm;
    std::optional<int> D_hm_generic;
    bool reordering_used = false;
    std::vector<std::string> notes;

    /// The bound used as certificate: D1 (murnaghan) or D2 (squares).
    int certificate() const;
    /// Every computed bound with its column name.
    std::vector<std::pair<std::string, int>> computed() const;
};

BoundReport bound_report(const TripleQuery &q);

} // namespace kronstab

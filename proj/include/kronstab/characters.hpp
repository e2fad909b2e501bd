#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "kronstab/partition.hpp"

namespace kronstab {

/// Character values are kept in a 128-bit signed integer with checked
/// arithmetic; |chi| <= sqrt(n!) fits for every n <= kMaxCharacterDegree.
using CharValue = __int128;

inline constexpr int kMaxCharacterDegree = 56;

mpz_class to_mpz(CharValue v);
std::string to_string(CharValue v);

/// Centralizer order prod_i i^{m_i} m_i!.
mpz_class z_order(const Partition &rho);

/// n!/z(rho), the number of permutations of cycle type rho.
mpz_class class_size(const Partition &rho);

/// (-1)^{n - length(rho)}.
int cycle_sign(const Partition &rho);

/// Memo for Murnaghan-Nakayama evaluations at a fixed degree n.
///
/// A shape is stored as the bit mask of its n-bead abacus (bead i sits at
/// lambda_i + n - i). A cycle type is consumed largest part first, so the
/// state of the recursion is (mask, remaining suffix of rho); suffixes are
/// interned as ids into the table of all partitions of size <= n.
///
/// Lookups and inserts are safe from multiple threads. Two threads may
/// compute the same entry; the second insert is a no-op.
class CharacterCache {
  public:
    explicit CharacterCache(int degree);
    CharacterCache(const CharacterCache &) = delete;
    CharacterCache &operator=(const CharacterCache &) = delete;

    int degree() const noexcept { return n_; }

    /// chi_lambda(rho). Throws DomainError unless |lambda| = |rho| = degree.
    CharValue value(const Partition &lambda, const Partition &rho);

    std::size_t entries() const;
    void clear();

  private:
    using Mask = unsigned __int128;
    struct Key {
        Mask mask;
        int rho;
        bool operator==(const Key &) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key &k) const noexcept;
    };
    static constexpr int kShards = 64;
    struct Shard {
        mutable std::shared_mutex mutex;
        std::unordered_map<Key, CharValue, KeyHash> map;
    };

    CharValue eval(Mask mask, int rho);
    int intern(const Partition &rho) const;

    int n_;
    std::vector<int> first_part_;
    std::vector<int> tail_;
    std::unordered_map<Partition, int, PartitionHash> ids_;
    std::unique_ptr<Shard[]> shards_;
};

/// Process-wide cache for degree n, created on first use.
std::shared_ptr<CharacterCache> character_cache(int degree);

/// Drops the process-wide cache for one degree (all degrees when < 0).
void evict_character_caches(int degree = -1);

/// chi_lambda(rho) through the process-wide cache.
CharValue character(const Partition &lambda, const Partition &rho);

/// Plain recursive Murnaghan-Nakayama on Young diagrams, no memo and no
/// abacus. Reference path for tests.
CharValue character_uncached(const Partition &lambda, const Partition &rho);

/// chi_lambda on every class in `classes`, serially.
std::vector<CharValue> character_vector_serial(const Partition &lambda,
                                               const std::vector<Partition> &classes,
                                               CharacterCache &cache);

/// Same values, classes distributed over OpenMP threads.
std::vector<CharValue> character_vector(const Partition &lambda,
                                        const std::vector<Partition> &classes,
                                        CharacterCache &cache);

/// Overflow-checked helpers, throwing LimitError.
CharValue checked_add(CharValue a, CharValue b);
CharValue checked_mul(CharValue a, CharValue b);

} // namespace kronstab

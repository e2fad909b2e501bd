#include "kronstab/characters.hpp"

#include <map>

#include "kronstab/errors.hpp"
#include "parallel.hpp"

namespace kronstab {

CharValue checked_add(CharValue a, CharValue b) {
    CharValue r;
    if (__builtin_add_overflow(a, b, &r))
        throw LimitError("character arithmetic overflow");
    return r;
}

CharValue checked_mul(CharValue a, CharValue b) {
    CharValue r;
    if (__builtin_mul_overflow(a, b, &r))
        throw LimitError("character arithmetic overflow");
    return r;
}

mpz_class to_mpz(CharValue v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

std::string to_string(CharValue v) { return to_mpz(v).get_str(); }

mpz_class z_order(const Partition &rho) {
    mpz_class z = 1;
    auto parts = rho.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(parts[i]), j - i);
        z *= p * factorial(static_cast<int>(j - i));
        i = j;
    }
    return z;
}

mpz_class class_size(const Partition &rho) { return factorial(rho.size()) / z_order(rho); }

int cycle_sign(const Partition &rho) { return (rho.size() - rho.length()) % 2 == 0 ? 1 : -1; }

namespace {

int popcount128(unsigned __int128 x) {
    return __builtin_popcountll(static_cast<std::uint64_t>(x)) +
           __builtin_popcountll(static_cast<std::uint64_t>(x >> 64));
}

int ctz128(unsigned __int128 x) {
    const auto lo = static_cast<std::uint64_t>(x);
    if (lo)
        return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

} // namespace

std::size_t CharacterCache::KeyHash::operator()(const Key &k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k.mask);
    auto hi = static_cast<std::uint64_t>(k.mask >> 64);
    std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
    h ^= (hi + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2)) * 0xbf58476d1ce4e5b9ULL;
    h ^= static_cast<std::uint64_t>(k.rho) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
}

CharacterCache::CharacterCache(int degree) : n_(degree), shards_(new Shard[kShards]) {
    if (degree < 0)
        throw DomainError("negative degree");
    if (degree > kMaxCharacterDegree)
        throw LimitError("character degree " + std::to_string(degree) + " exceeds " +
                         std::to_string(kMaxCharacterDegree));
    // Ids are assigned by increasing size so the tail of a partition is
    // always interned before the partition itself.
    for (int m = 0; m <= n_; ++m) {
        for (const Partition &p : partitions_of(m)) {
            const int id = static_cast<int>(first_part_.size());
            ids_.emplace(p, id);
            first_part_.push_back(p.empty() ? 0 : p[0]);
            tail_.push_back(p.empty() ? -1 : ids_.at(drop_first(p)));
        }
    }
}

int CharacterCache::intern(const Partition &rho) const {
    auto it = ids_.find(rho);
    if (it == ids_.end())
        throw DomainError("cycle type " + format_partition(rho) + " not of degree <= " + std::to_string(n_));
    return it->second;
}

CharValue CharacterCache::value(const Partition &lambda, const Partition &rho) {
    if (lambda.size() != n_ || rho.size() != n_)
        throw DomainError("character needs |lambda| = |rho| = " + std::to_string(n_) + ", got " +
                          std::to_string(lambda.size()) + " and " + std::to_string(rho.size()));
    Mask mask = 0;
    for (int i = 1; i <= n_; ++i)
        mask |= Mask(1) << (lambda.at(i) + n_ - i);
    return eval(mask, intern(rho));
}

CharValue CharacterCache::eval(Mask mask, int rho) {
    const int r = first_part_[static_cast<std::size_t>(rho)];
    if (r == 0)
        return 1;
    const int rest = tail_[static_cast<std::size_t>(rho)];

    // A single remaining part: lambda itself must be a hook of length r.
    const bool memo = first_part_[static_cast<std::size_t>(rest)] != 0;
    const Key key{mask, rho};
    Shard &shard = shards_[KeyHash{}(key) % kShards];
    if (memo) {
        std::shared_lock lock(shard.mutex);
        auto it = shard.map.find(key);
        if (it != shard.map.end())
            return it->second;
    }

    Mask cand = mask & ~(mask << r) & (~Mask(0) << r);
    CharValue total = 0;
    while (cand) {
        const int b = ctz128(cand);
        cand &= cand - 1;
        const Mask between = ((Mask(1) << b) - 1) & ~((Mask(1) << (b - r + 1)) - 1);
        const int height = popcount128(mask & between);
        const Mask next = mask ^ (Mask(1) << b) ^ (Mask(1) << (b - r));
        const CharValue sub = eval(next, rest);
        total = checked_add(total, height % 2 ? -sub : sub);
    }

    if (memo) {
        std::unique_lock lock(shard.mutex);
        shard.map.emplace(key, total);
    }
    return total;
}

std::size_t CharacterCache::entries() const {
    std::size_t n = 0;
    for (int i = 0; i < kShards; ++i) {
        std::shared_lock lock(shards_[i].mutex);
        n += shards_[i].map.size();
    }
    return n;
}

void CharacterCache::clear() {
    for (int i = 0; i < kShards; ++i) {
        std::unique_lock lock(shards_[i].mutex);
        shards_[i].map = {};
    }
}

namespace {

std::mutex registry_mutex;
std::map<int, std::shared_ptr<CharacterCache>> registry;

} // namespace

std::shared_ptr<CharacterCache> character_cache(int degree) {
    std::lock_guard lock(registry_mutex);
    auto &slot = registry[degree];
    if (!slot)
        slot = std::make_shared<CharacterCache>(degree);
    return slot;
}

void evict_character_caches(int degree) {
    std::lock_guard lock(registry_mutex);
    if (degree < 0)
        registry.clear();
    else
        registry.erase(degree);
}

CharValue character(const Partition &lambda, const Partition &rho) {
    if (lambda.size() != rho.size())
        throw DomainError("character needs |lambda| = |rho|, got " + std::to_string(lambda.size()) + " and " +
                          std::to_string(rho.size()));
    return character_cache(lambda.size())->value(lambda, rho);
}

namespace {

// Removes border strips of length r directly on the row lengths. A strip
// occupying rows i..j leaves rows i..j-1 at lambda_{k+1} - 1 and row j
// somewhere in [lambda_{j+1}, lambda_j - 1].
CharValue mn_rows(const std::vector<int> &lambda, std::span<const int> rho) {
    if (rho.empty())
        return 1;
    const int r = rho[0];
    const auto rest = rho.subspan(1);
    const int len = static_cast<int>(lambda.size());
    auto row = [&](int k) { return k < len ? lambda[static_cast<std::size_t>(k)] : 0; };
    CharValue total = 0;
    for (int i = 0; i < len; ++i) {
        int used = 0;
        for (int j = i; j < len; ++j) {
            const int remove_j = r - used;
            const int new_j = row(j) - remove_j;
            if (remove_j <= 0)
                break;
            if (new_j >= row(j + 1) && new_j <= row(j) - 1) {
                std::vector<int> mu = lambda;
                for (int k = i; k < j; ++k)
                    mu[static_cast<std::size_t>(k)] = row(k + 1) - 1;
                mu[static_cast<std::size_t>(j)] = new_j;
                while (!mu.empty() && mu.back() == 0)
                    mu.pop_back();
                const CharValue sub = mn_rows(mu, rest);
                total = checked_add(total, (j - i) % 2 ? -sub : sub);
            }
            used += row(j) - row(j + 1) + 1;
            if (row(j + 1) == 0)
                break;
        }
    }
    return total;
}

} // namespace

CharValue character_uncached(const Partition &lambda, const Partition &rho) {
    if (lambda.size() != rho.size())
        throw DomainError("character needs |lambda| = |rho|");
    return mn_rows(std::vector<int>(lambda.parts().begin(), lambda.parts().end()), rho.parts());
}

std::vector<CharValue> character_vector_serial(const Partition &lambda, const std::vector<Partition> &classes,
                                               CharacterCache &cache) {
    std::vector<CharValue> out;
    out.reserve(classes.size());
    for (const Partition &rho : classes)
        out.push_back(cache.value(lambda, rho));
    return out;
}

std::vector<CharValue> character_vector(const Partition &lambda, const std::vector<Partition> &classes,
                                        CharacterCache &cache) {
    std::vector<CharValue> out(classes.size());
    detail::parallel_for(
        static_cast<std::int64_t>(classes.size()),
        [&](std::int64_t i) {
            const auto k = static_cast<std::size_t>(i);
            out[k] = cache.value(lambda, classes[k]);
        },
        16);
    return out;
}

} // namespace kronstab

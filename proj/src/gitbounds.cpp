#include "kronstab/gitbounds.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

#include "kronstab/assignment.hpp"
#include "kronstab/errors.hpp"

namespace kronstab {

std::string family_name(Family f) { return f == Family::Murnaghan ? "murnaghan" : "squares"; }

Family parse_family(const std::string &name) {
    if (name == "murnaghan")
        return Family::Murnaghan;
    if (name == "squares")
        return Family::Squares;
    throw ParseError("unknown family '" + name + "' (expected murnaghan or squares)");
}

Direction family_direction(Family f) {
    if (f == Family::Murnaghan)
        return {Partition{1}, Partition{1}, Partition{1}};
    return {Partition{1, 1}, Partition{1, 1}, Partition{2}};
}

int stable_from(long long num, long long den) {
    if (den <= 0)
        throw DomainError("stable_from needs a positive denominator");
    long long q = num / den;
    if (num % den != 0 && num > 0)
        ++q;
    return static_cast<int>(std::max(0LL, q));
}

namespace {

long long at(const Partition &p, int i) { return i >= 1 ? p.at(i) : 0; }

long long range_sum(const Partition &p, int from, int to) {
    long long s = 0;
    for (int k = std::max(from, 1); k <= to; ++k)
        s += p.at(k);
    return s;
}

void require_family(const TripleQuery &q, Family f, const char *op) {
    if (q.family != f)
        throw DomainError(std::string(op) + " applies to the " + family_name(f) + " family only");
}

void require_lengths(const Partition &lambda, const Partition &mu) {
    if (lambda.length() < 2 || mu.length() < 2)
        throw DegenerateTriple("bound needs the first two partitions of length >= 2");
}

using Ordering = std::array<const Partition *, 3>;

std::vector<Ordering> orderings(const TripleQuery &q) {
    const Partition *t[3] = {&q.lambda, &q.mu, &q.nu};
    std::vector<Ordering> out;
    int idx[3] = {0, 1, 2};
    do {
        out.push_back({t[idx[0]], t[idx[1]], t[idx[2]]});
    } while (std::next_permutation(idx, idx + 3));
    return out;
}

// Least value of `f` over the orderings it accepts; nullopt if it rejects all.
template <class F> std::optional<int> min_over_orderings(const TripleQuery &q, F &&f) {
    std::optional<int> best;
    for (const Ordering &o : orderings(q)) {
        try {
            const int v = f(*o[0], *o[1], *o[2]);
            if (!best || v < *best)
                best = v;
        } catch (const DegenerateTriple &) {
        }
    }
    return best;
}

} // namespace

long long d1_numerator(const Partition &lambda, const Partition &mu, const Partition &nu) {
    require_lengths(lambda, mu);
    const int n1 = lambda.length(), n2 = mu.length(), N = n1 * n2;
    long long x = -at(lambda, 1) + at(lambda, 2) - at(mu, 1) + at(mu, 2) + 2 * (at(nu, 2) - at(nu, N));
    for (int k = 1; k <= n1 + n2 - 4; ++k)
        x += at(nu, k + 2) - at(nu, N - k);
    return x;
}

long long d2_numerator(const Partition &lambda, const Partition &mu, const Partition &nu) {
    require_lengths(lambda, mu);
    const int n1 = lambda.length(), n2 = mu.length(), N = n1 * n2;
    const long long m = std::max(-at(lambda, 2) - at(mu, 1), -at(lambda, 1) - at(mu, 2));
    if (n1 >= 3 && n2 >= 3) {
        long long x = m + at(lambda, 3) + at(mu, 3) + 2 * (at(nu, 2) - at(nu, N));
        for (int k = 1; k <= n1 + n2 - 4; ++k)
            x += at(nu, k + 2) - at(nu, N - k);
        return x;
    }
    if (n1 == 2)
        return m + at(mu, 3) + 2 * at(nu, 2) - at(nu, 2 * n2) + range_sum(nu, 3, n2 + 1);
    return m + at(lambda, 3) + 2 * at(nu, 2) - at(nu, 2 * n1) + range_sum(nu, 3, n1 + 1);
}

long long db_improved_numerator(const Partition &lambda, const Partition &mu, const Partition &nu) {
    require_lengths(lambda, mu);
    const int n1 = lambda.length(), n2 = mu.length(), N = n1 * n2;
    return -at(lambda, 1) + mu.size() - at(mu, 1) + at(nu, 2) - range_sum(nu, n1 + n2, N);
}

long long dbor2_improved_numerator(const Partition &lambda, const Partition &mu, const Partition &nu) {
    require_lengths(lambda, mu);
    const int n1 = lambda.length(), n2 = mu.length(), N = n1 * n2;
    const long long mu_ge3 = mu.size() - at(mu, 1) - at(mu, 2);
    return -at(lambda, 1) + at(lambda, 2) + 2 * at(mu, 2) + mu_ge3 - at(nu, 1) + at(nu, 2) -
           range_sum(nu, n1 + n2 - 1, N - n1 - n2 + 3) - 2 * range_sum(nu, N - n1 - n2 + 4, N - 1) -
           3 * at(nu, N);
}

int bound_D1(const TripleQuery &q, bool minimize_over_orderings) {
    require_family(q, Family::Murnaghan, "D1");
    if (!minimize_over_orderings)
        return stable_from(d1_numerator(q.lambda, q.mu, q.nu), 2);
    auto best = min_over_orderings(q, [](const Partition &l, const Partition &m, const Partition &n) {
        return stable_from(d1_numerator(l, m, n), 2);
    });
    if (!best)
        throw DegenerateTriple("no ordering of the triple has two partitions of length >= 2");
    return *best;
}

int bound_D2(const TripleQuery &q, bool minimize_over_swap) {
    require_family(q, Family::Squares, "D2");
    const int fixed = stable_from(d2_numerator(q.lambda, q.mu, q.nu), 2);
    if (!minimize_over_swap)
        return fixed;
    return std::min(fixed, stable_from(d2_numerator(q.mu, q.lambda, q.nu), 2));
}

int bound_DB(const TripleQuery &q, bool minimize_over_nu_choice) {
    require_family(q, Family::Murnaghan, "DB");
    auto db = [](const Partition &l, const Partition &m, const Partition &n) {
        return stable_from(static_cast<long long>(m.size()) - at(l, 1) - at(m, 1) + at(n, 2), 1);
    };
    if (!minimize_over_nu_choice)
        return db(q.lambda, q.mu, q.nu);
    return std::min({db(q.lambda, q.mu, q.nu), db(q.lambda, q.nu, q.mu), db(q.mu, q.nu, q.lambda)});
}

int bound_DB_improved(const TripleQuery &q) {
    require_family(q, Family::Murnaghan, "DB improved");
    auto best = min_over_orderings(q, [](const Partition &l, const Partition &m, const Partition &n) {
        return stable_from(db_improved_numerator(l, m, n), 1);
    });
    const int plain = bound_DB(q, true);
    return best ? std::min(*best, plain) : plain;
}

int bound_DBOR2(const TripleQuery &q) {
    require_family(q, Family::Murnaghan, "DBOR2");
    const long long x = -at(q.lambda, 1) + (q.mu.size() - at(q.mu, 1)) - at(q.nu, 1) + at(q.lambda, 2) +
                        at(q.mu, 2) + at(q.nu, 2);
    // Floor division for a possibly negative numerator.
    const long long half = x >= 0 ? x / 2 : -((-x + 1) / 2);
    return static_cast<int>(std::max(0LL, half));
}

int bound_DBOR2_improved(const TripleQuery &q) {
    require_family(q, Family::Murnaghan, "DBOR2 improved");
    auto best = min_over_orderings(q, [](const Partition &l, const Partition &m, const Partition &n) {
        return stable_from(dbor2_improved_numerator(l, m, n), 2);
    });
    const int plain = bound_DBOR2(q);
    return best ? std::min(*best, plain) : plain;
}

int bound_Dm(const TripleQuery &q) {
    require_family(q, Family::Murnaghan, "Dm");
    int d1 = 0;
    try {
        d1 = bound_D1(q, true);
    } catch (const DegenerateTriple &) {
        // Two partitions of length 1: g is a Kronecker delta, constant in d.
        d1 = 0;
    }
    return std::min({d1, bound_DB_improved(q), bound_DBOR2_improved(q)});
}

int bound_hyperoct(const DoublePartition &lambda, const DoublePartition &mu, const DoublePartition &nu) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw DomainError("hyperoctahedral bound needs double partitions of equal total size");
    require_lengths(lambda.plus, mu.plus);
    const int lp = lambda.plus.length(), lm = lambda.minus.length();
    const int mp = mu.plus.length(), mm = mu.minus.length();
    const int m = lp * mp + lm * mm;
    const int n = lp * mm + lm * mp;
    long long x = -at(lambda.plus, 1) + at(lambda.plus, 2) - at(mu.plus, 1) + at(mu.plus, 2) +
                  2 * (at(nu.plus, 2) - at(nu.plus, m));
    for (int k = 1; k <= lp + mp - 4; ++k)
        x += at(nu.plus, k + 2) - at(nu.plus, m - k);
    for (int k = 1; k <= lm + mm; ++k)
        x += at(nu.minus, k) - at(nu.minus, n - k + 1);
    return stable_from(x, 2);
}

int FlagFactor::dimension() const {
    int d = 0;
    for (const auto &[w, mult] : weights)
        d += mult;
    return d;
}

namespace {

long long factor_max(const FlagFactor &f) {
    const int N = f.dimension();
    if (N == 0)
        return 0;
    for (const auto &[w, mult] : f.weights)
        if (mult < 0)
            throw ScenarioError(f.name + ": negative multiplicity");
    auto coef = [&](int k) -> long long { return f.dual ? f.objective.at(N + 1 - k) : -f.objective.at(k); };

    std::map<int, int> pool;
    for (const auto &[w, mult] : f.weights)
        pool[w] += mult;

    std::vector<std::vector<int>> allowed(static_cast<std::size_t>(N) + 1);
    for (const auto &[pos, w] : f.pinned) {
        if (pos < 1 || pos > N)
            throw ScenarioError(f.name + ": pinned position " + std::to_string(pos) + " out of range");
        if (!allowed[static_cast<std::size_t>(pos)].empty())
            throw ScenarioError(f.name + ": position " + std::to_string(pos) + " pinned twice");
        allowed[static_cast<std::size_t>(pos)] = {w};
    }
    if (f.excluded_last) {
        auto &last = allowed[static_cast<std::size_t>(N)];
        if (last.empty()) {
            last = f.last_weights;
        } else {
            std::vector<int> both;
            for (int w : last)
                if (std::find(f.last_weights.begin(), f.last_weights.end(), w) != f.last_weights.end())
                    both.push_back(w);
            last = both;
        }
        if (last.empty())
            throw ScenarioError(f.name + ": no weight allowed in the last slot");
    }

    long long total = 0;
    std::vector<int> free_positions;
    bool constrained = false;
    for (int k = 1; k <= N; ++k) {
        const auto &a = allowed[static_cast<std::size_t>(k)];
        if (a.size() == 1) {
            auto it = pool.find(a[0]);
            if (it == pool.end() || it->second == 0)
                throw ScenarioError(f.name + ": weight " + std::to_string(a[0]) + " required at position " +
                                    std::to_string(k) + " is not available");
            --it->second;
            total += coef(k) * a[0];
        } else {
            constrained = constrained || !a.empty();
            free_positions.push_back(k);
        }
    }
    std::vector<int> rest;
    for (const auto &[w, mult] : pool)
        rest.insert(rest.end(), static_cast<std::size_t>(mult), w);

    if (!constrained) {
        // Rearrangement: largest coefficients take the largest weights.
        std::vector<long long> c;
        for (int k : free_positions)
            c.push_back(coef(k));
        std::sort(c.begin(), c.end(), std::greater<>());
        std::sort(rest.begin(), rest.end(), std::greater<>());
        for (std::size_t i = 0; i < c.size(); ++i)
            total += c[i] * rest[i];
        return total;
    }

    ProfitMatrix profit(free_positions.size(), std::vector<std::optional<long long>>(rest.size()));
    for (std::size_t i = 0; i < free_positions.size(); ++i) {
        const int k = free_positions[i];
        const auto &a = allowed[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < rest.size(); ++j)
            if (a.empty() || std::find(a.begin(), a.end(), rest[j]) != a.end())
                profit[i][j] = coef(k) * rest[j];
    }
    auto best = max_assignment(profit);
    if (!best)
        throw ScenarioError(f.name + ": position constraints cannot be satisfied");
    return total + best->value;
}

std::vector<std::pair<int, int>> multiset(const std::vector<int> &ws) {
    std::map<int, int> m;
    for (int w : ws)
        ++m[w];
    return {m.rbegin(), m.rend()};
}

std::vector<int> padded(std::initializer_list<int> head, int length) {
    std::vector<int> v(head);
    v.resize(static_cast<std::size_t>(length), 0);
    return v;
}

} // namespace

long long hm_max_destabilization(const std::vector<FlagFactor> &factors) {
    long long total = 0;
    for (const FlagFactor &f : factors)
        total += factor_max(f);
    return total;
}

int hm_bound(const std::vector<FlagFactor> &factors, int mu_Lbar) {
    if (mu_Lbar <= 0)
        throw ScenarioError("mu of the ample bundle must be positive");
    return stable_from(hm_max_destabilization(factors), mu_Lbar);
}

int hm_bound(const WeightScenario &s) { return hm_bound(s.factors, s.mu_Lbar); }

WeightScenario tensor_scenario(std::string name, const Partition &lambda, const Partition &mu, const Partition &nu,
                               const std::vector<int> &a, const std::vector<int> &b, const std::vector<int> &pins1,
                               const std::vector<int> &pins2, int gamma_size) {
    WeightScenario s;
    s.name = std::move(name);
    const std::size_t n1 = a.size(), n2 = b.size();

    FlagFactor v1{"V1", lambda, false, multiset(a), {}, false, {}};
    FlagFactor v2{"V2", mu, false, multiset(b), {}, false, {}};
    int pinned_weight = 0;
    for (std::size_t i = 0; i < pins1.size(); ++i) {
        const int w = a.at(static_cast<std::size_t>(pins1[i] - 1));
        v1.pinned.push_back({static_cast<int>(i) + 1, w});
        pinned_weight += w;
    }
    for (std::size_t i = 0; i < pins2.size(); ++i) {
        const int w = b.at(static_cast<std::size_t>(pins2[i] - 1));
        v2.pinned.push_back({static_cast<int>(i) + 1, w});
        pinned_weight += w;
    }

    std::vector<int> tensor;
    for (int x : a)
        for (int y : b)
            tensor.push_back(x + y);
    // Weight of the quotient by the kernel of the invariant form.
    int top = std::numeric_limits<int>::min();
    for (std::size_t i = 0; i < std::min(n1, n2); ++i)
        top = std::max(top, a[i] + b[i]);
    FlagFactor v12{"V1(x)V2", nu, true, multiset(tensor), {}, true, {top}};

    s.factors = {v1, v2, v12};
    s.mu_Lbar = pinned_weight - gamma_size * top;
    return s;
}

WeightScenario tau0_murnaghan(const Partition &lambda, const Partition &mu, const Partition &nu) {
    require_lengths(lambda, mu);
    const int n1 = lambda.length(), n2 = mu.length();
    return tensor_scenario("tau0", lambda, mu, nu, padded({1, -1}, n1), padded({-1, 1}, n2), {1}, {2}, 1);
}

WeightScenario tau_B(const Partition &lambda, const Partition &mu, const Partition &nu) {
    require_lengths(lambda, mu);
    const int n1 = lambda.length(), n2 = mu.length();
    std::vector<int> b(static_cast<std::size_t>(n2), -1);
    b[1] = 0;
    return tensor_scenario("tau_B", lambda, mu, nu, padded({1}, n1), b, {1}, {2}, 1);
}

WeightScenario tau_BOR2(const Partition &lambda, const Partition &mu, const Partition &nu) {
    require_lengths(lambda, mu);
    const int n1 = lambda.length(), n2 = mu.length();
    std::vector<int> b(static_cast<std::size_t>(n2), -1);
    b[0] = -2;
    b[1] = 0;
    return tensor_scenario("tau_BOR2", lambda, mu, nu, padded({1, -1}, n1), b, {1}, {2}, 1);
}

namespace {

// tau1 and tau2 of the squares family. A length-2 mu with lambda longer
// is handled by exchanging the two factors. When both lengths are 2, V2
// keeps a third basis vector (mu_3 = 0) and V1 (x) V2 keeps its four slots.
WeightScenario squares_scenario(bool first, Partition lambda, Partition mu, const Partition &nu) {
    require_lengths(lambda, mu);
    if (mu.length() == 2 && lambda.length() >= 3)
        std::swap(lambda, mu);
    const int n1 = lambda.length();
    const bool both_two = n1 == 2 && mu.length() == 2;
    const int n2 = std::max(mu.length(), 3);
    const std::string name = first ? "tau1" : "tau2";
    WeightScenario s =
        first ? tensor_scenario(name, lambda, mu, nu, padded({0, 1, -1}, std::max(n1, 3)), padded({0, -1, 1}, n2),
                                {1, 2}, {3, 1}, 2)
              : tensor_scenario(name, lambda, mu, nu, padded({1, 0, -1}, std::max(n1, 3)), padded({-1, 0, 1}, n2),
                                {1, 2}, {2, 3}, 2);
    if (n1 == 2) {
        // V1 is two-dimensional: drop the third weight and rebuild V1 (x) V2.
        const std::vector<int> a = first ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
        const std::vector<int> b = first ? padded({0, -1, 1}, n2) : padded({-1, 0, 1}, n2);
        s = tensor_scenario(name, lambda, mu, nu, a, b, {1, 2}, first ? std::vector<int>{3, 1} : std::vector<int>{2, 3},
                            2);
    }
    if (both_two)
        s.factors[2].weights = {{2, 1}, {1, 1}, {0, 1}, {-1, 1}};
    return s;
}

} // namespace

WeightScenario tau1_squares(const Partition &lambda, const Partition &mu, const Partition &nu) {
    return squares_scenario(true, lambda, mu, nu);
}

WeightScenario tau2_squares(const Partition &lambda, const Partition &mu, const Partition &nu) {
    return squares_scenario(false, lambda, mu, nu);
}

int hm_bound_squares(const Partition &lambda, const Partition &mu, const Partition &nu) {
    return std::max(hm_bound(tau1_squares(lambda, mu, nu)), hm_bound(tau2_squares(lambda, mu, nu)));
}

WeightScenario tau0_hyperoct(const DoublePartition &lambda, const DoublePartition &mu, const DoublePartition &nu) {
    require_lengths(lambda.plus, mu.plus);
    const int lp = lambda.plus.length(), lm = lambda.minus.length();
    const int mp = mu.plus.length(), mm = mu.minus.length();
    const std::vector<int> a = padded({1, -1}, lp);
    const std::vector<int> b = padded({-1, 1}, mp);

    std::vector<int> plus_weights(static_cast<std::size_t>(lm * mm), 0);
    for (int x : a)
        for (int y : b)
            plus_weights.push_back(x + y);
    std::vector<int> minus_weights;
    for (int i = 0; i < mm; ++i)
        minus_weights.insert(minus_weights.end(), a.begin(), a.end());
    for (int i = 0; i < lm; ++i)
        minus_weights.insert(minus_weights.end(), b.begin(), b.end());

    WeightScenario s;
    s.name = "tau0_hyperoct";
    s.factors = {
        {"V1+", lambda.plus, false, multiset(a), {{1, 1}}, false, {}},
        {"V1-", lambda.minus, false, multiset(std::vector<int>(static_cast<std::size_t>(lm), 0)), {}, false, {}},
        {"V2+", mu.plus, false, multiset(b), {{1, 1}}, false, {}},
        {"V2-", mu.minus, false, multiset(std::vector<int>(static_cast<std::size_t>(mm), 0)), {}, false, {}},
        {"V+", nu.plus, true, multiset(plus_weights), {}, true, {0}},
        {"V-", nu.minus, true, multiset(minus_weights), {}, false, {}},
    };
    s.mu_Lbar = 2;
    return s;
}

int BoundReport::certificate() const {
    if (family == Family::Murnaghan)
        return D1.value_or(0);
    return D2.value_or(0);
}

std::vector<std::pair<std::string, int>> BoundReport::computed() const {
    std::vector<std::pair<std::string, int>> out;
    auto put = [&](const char *name, const std::optional<int> &v) {
        if (v)
            out.emplace_back(name, *v);
    };
    put("D1", D1);
    put("D1_fixed", D1_fixed);
    put("D2", D2);
    put("D2_fixed", D2_fixed);
    put("D_B", DB);
    put("D_B_improved", DB_improved);
    put("D_BOR2", DBOR2);
    put("D_BOR2_improved", DBOR2_improved);
    put("D_m", Dm);
    return out;
}

BoundReport bound_report(const TripleQuery &q) {
    if (q.lambda.size() != q.mu.size() || q.mu.size() != q.nu.size())
        throw DomainError("bounds need partitions of equal size");
    BoundReport r;
    r.family = q.family;
    r.lambda = q.lambda;
    r.mu = q.mu;
    r.nu = q.nu;
    if (q.family == Family::Murnaghan) {
        try {
            r.D1 = bound_D1(q, true);
        } catch (const DegenerateTriple &) {
            r.D1 = 0;
            r.notes.push_back("two partitions of length 1: the coefficient is a Kronecker delta, constant from d=0");
        }
        try {
            r.D1_fixed = bound_D1(q, false);
            r.D_hm_generic = hm_bound(tau0_murnaghan(q.lambda, q.mu, q.nu));
        } catch (const DegenerateTriple &) {
            r.notes.push_back("given ordering has a partition of length < 2; fixed-ordering D1 skipped");
        }
        r.reordering_used = r.D1 && r.D1_fixed && *r.D1 < *r.D1_fixed;
        r.DB = bound_DB(q, true);
        r.DB_improved = bound_DB_improved(q);
        r.DBOR2 = bound_DBOR2(q);
        r.DBOR2_improved = bound_DBOR2_improved(q);
        r.Dm = std::min({*r.D1, *r.DB_improved, *r.DBOR2_improved});
    } else {
        r.D2_fixed = bound_D2(q, false);
        r.D2 = bound_D2(q, true);
        r.reordering_used = *r.D2 < *r.D2_fixed;
        r.D_hm_generic = hm_bound_squares(q.lambda, q.mu, q.nu);
    }
    return r;
}

} // namespace kronstab

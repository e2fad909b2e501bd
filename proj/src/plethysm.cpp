#include "kronstab/plethysm.hpp"

#include <algorithm>
#include <mutex>

#include "kronstab/characters.hpp"
#include "kronstab/errors.hpp"

namespace kronstab {

mpq_class SymFunc::coeff(const Partition &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void SymFunc::add(const Partition &p, const mpq_class &c) {
    mpq_class v = c;
    v.canonicalize();
    if (v == 0)
        return;
    auto [it, inserted] = terms_.emplace(p, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int SymFunc::degree() const {
    if (terms_.empty())
        throw DomainError("degree of the zero symmetric function");
    const int d = terms_.begin()->first.size();
    for (const auto &[p, c] : terms_)
        if (p.size() != d)
            throw DomainError("symmetric function is not homogeneous");
    return d;
}

SymFunc power_sum(const Partition &rho) {
    SymFunc f(Basis::PowerSum);
    f.add(rho, 1);
    return f;
}

SymFunc schur_to_powersum(const Partition &lambda) {
    SymFunc f(Basis::PowerSum);
    for (const Partition &rho : partitions_of(lambda.size()))
        f.add(rho, mpq_class(to_mpz(character(lambda, rho)), z_order(rho)));
    return f;
}

SymFunc powersum_to_schur(const SymFunc &f) {
    if (f.basis() != Basis::PowerSum)
        throw DomainError("powersum_to_schur needs a power-sum element");
    std::map<int, std::vector<const std::pair<const Partition, mpq_class> *>> by_degree;
    for (const auto &term : f.terms())
        by_degree[term.first.size()].push_back(&term);
    SymFunc out(Basis::Schur);
    for (const auto &[n, terms] : by_degree) {
        for (const Partition &nu : partitions_of(n)) {
            mpq_class c = 0;
            for (const auto *t : terms)
                c += t->second * to_mpz(character(nu, t->first));
            out.add(nu, c);
        }
    }
    return out;
}

namespace {

Partition merge(const Partition &a, const Partition &b) {
    std::vector<int> parts(a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

void require_powersum(const SymFunc &f) {
    if (f.basis() != Basis::PowerSum)
        throw DomainError("operation needs power-sum basis");
}

} // namespace

SymFunc multiply(const SymFunc &f, const SymFunc &g) {
    require_powersum(f);
    require_powersum(g);
    SymFunc out(Basis::PowerSum);
    for (const auto &[a, ca] : f.terms())
        for (const auto &[b, cb] : g.terms())
            out.add(merge(a, b), ca * cb);
    return out;
}

SymFunc plethysm_powersum(const SymFunc &f, const SymFunc &g) {
    require_powersum(f);
    require_powersum(g);
    if (!g.is_zero())
        g.degree();
    std::map<int, SymFunc> pk_of_g;
    auto pk = [&](int k) -> const SymFunc & {
        auto it = pk_of_g.find(k);
        if (it != pk_of_g.end())
            return it->second;
        SymFunc h(Basis::PowerSum);
        for (const auto &[sigma, c] : g.terms())
            h.add(scale(sigma, k), c);
        return pk_of_g.emplace(k, std::move(h)).first->second;
    };
    SymFunc out(Basis::PowerSum);
    for (const auto &[rho, c] : f.terms()) {
        SymFunc prod = power_sum(Partition{});
        for (int k : rho.parts())
            prod = multiply(prod, pk(k));
        for (const auto &[p, cp] : prod.terms())
            out.add(p, c * cp);
    }
    return out;
}

std::map<Partition, mpz_class> plethysm_schur(const Partition &lambda, const Partition &mu) {
    const long degree = static_cast<long>(lambda.size()) * mu.size();
    if (degree > kMaxPlethysmDegree)
        throw LimitError("plethysm of total degree " + std::to_string(degree) + " exceeds the desk-scale limit " +
                         std::to_string(kMaxPlethysmDegree));
    static std::mutex memo_mutex;
    static std::map<std::pair<Partition, Partition>, std::map<Partition, mpz_class>> memo;
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find({lambda, mu});
        if (it != memo.end())
            return it->second;
    }
    const SymFunc s = powersum_to_schur(plethysm_powersum(schur_to_powersum(lambda), schur_to_powersum(mu)));
    std::map<Partition, mpz_class> out;
    for (const auto &[nu, c] : s.terms()) {
        if (c.get_den() != 1 || c < 0)
            throw ConsistencyError("plethysm coefficient of " + format_partition(nu) + " is " + c.get_str());
        out.emplace(nu, c.get_num());
    }
    std::lock_guard lock(memo_mutex);
    memo.emplace(std::make_pair(lambda, mu), out);
    return out;
}

mpz_class plethysm_coeff(const Partition &lambda, const Partition &mu, const Partition &nu) {
    if (static_cast<long>(lambda.size()) * mu.size() != nu.size())
        return 0;
    const auto expansion = plethysm_schur(lambda, mu);
    auto it = expansion.find(nu);
    return it == expansion.end() ? mpz_class(0) : it->second;
}

} // namespace kronstab

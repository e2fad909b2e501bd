#include "kronstab/hyperoctahedral.hpp"

#include <array>
#include <map>

#include "kronstab/errors.hpp"
#include "kronstab/kronecker.hpp"
#include "kronstab/lr.hpp"

namespace kronstab {

namespace {

using Quad = std::array<Partition, 4>;
using Tensor = std::map<Quad, mpz_class>;

// Decomposes S^g(X (+) Y) with X = A (x) B and Y = C (x) D into
// sum T[a,b,c,d] S^a(A) S^b(B) S^c(C) S^d(D), where |a| = |b| = s and
// |c| = |d| = |g| - s.
Tensor split(const Partition &g, int s) {
    Tensor out;
    const int t = g.size() - s;
    const auto first = partitions_of(s);
    const auto second = partitions_of(t);
    for (const Partition &d1 : first) {
        for (const Partition &d2 : second) {
            const mpz_class l = lr(d1, d2, g);
            if (l == 0)
                continue;
            for (const Partition &a : first) {
                for (const Partition &b : first) {
                    const mpz_class k1 = kron(d1, a, b);
                    if (k1 == 0)
                        continue;
                    for (const Partition &c : second) {
                        for (const Partition &d : second) {
                            const mpz_class k2 = kron(d2, c, d);
                            if (k2 != 0)
                                out[{a, b, c, d}] += l * k1 * k2;
                        }
                    }
                }
            }
        }
    }
    return out;
}

} // namespace

mpz_class hyperoct_coeff(const DoublePartition &alpha, const DoublePartition &beta, const DoublePartition &gamma) {
    const int n = alpha.size();
    if (beta.size() != n || gamma.size() != n)
        return 0;
    if (n > kMaxHyperoctSize)
        throw LimitError("hyperoctahedral coefficient at total size " + std::to_string(n) +
                         " exceeds the desk-scale limit " + std::to_string(kMaxHyperoctSize));
    // Block sizes: s1 on V1+ (x) V2+, s2 on V1- (x) V2-, s3 on V1+ (x) V2-,
    // s4 on V1- (x) V2+. They are forced by the six marginal sizes.
    const int twice_s1 = gamma.plus.size() + beta.plus.size() + alpha.plus.size() - n;
    if (twice_s1 < 0 || twice_s1 % 2)
        return 0;
    const int s1 = twice_s1 / 2;
    const int s2 = gamma.plus.size() - s1;
    const int s3 = alpha.plus.size() - s1;
    const int s4 = beta.plus.size() - s1;
    if (s2 < 0 || s3 < 0 || s4 < 0)
        return 0;

    // plus_part[a,b,c,d]: a on V1+, b on V2+, c on V1-, d on V2-.
    const Tensor plus_part = split(gamma.plus, s1);
    // minus_part[a',d',c',b']: a' on V1+, d' on V2-, c' on V1-, b' on V2+.
    const Tensor minus_part = split(gamma.minus, s3);

    mpz_class total = 0;
    for (const auto &[p, tp] : plus_part) {
        const auto &[a, b, c, d] = p;
        for (const auto &[m, tm] : minus_part) {
            const auto &[a2, d2, c2, b2] = m;
            mpz_class term = lr(a, a2, alpha.plus);
            if (term == 0)
                continue;
            term *= lr(c, c2, alpha.minus);
            if (term == 0)
                continue;
            term *= lr(b, b2, beta.plus);
            if (term == 0)
                continue;
            term *= lr(d, d2, beta.minus);
            total += term * tp * tm;
        }
    }
    return total;
}

mpz_class dim_wreath(const DoublePartition &alpha) {
    return binomial(alpha.size(), alpha.plus.size()) * dim_sn(alpha.plus) * dim_sn(alpha.minus);
}

} // namespace kronstab

// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Usage: kronstab_acceptance [criterion...]   (default: all seven)

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "kronstab/characters.hpp"
#include "kronstab/gitbounds.hpp"
#include "kronstab/hyperoctahedral.hpp"
#include "kronstab/kronecker.hpp"
#include "kronstab/lr.hpp"
#include "kronstab/plethysm.hpp"
#include "kronstab/report.hpp"
#include "kronstab/stabilization.hpp"
#include "oracles.hpp"

using namespace kronstab;

namespace {

// Every compared quantity is an exact integer.
constexpr long kTolerance = 0;

bool equal(const mpz_class &a, const mpz_class &b) { return abs(a - b) <= kTolerance; }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    int checks = 0;

    void expect(bool cond, const std::string &what) {
        ++checks;
        if (!cond) {
            ok = false;
            detail << "    " << what << '\n';
        }
    }
    void note(const std::string &what) { detail << "    " << what << '\n'; }
};

std::vector<DoublePartition> double_partitions(int n) {
    std::vector<DoublePartition> out;
    for (int k = n; k >= 0; --k)
        for (const Partition &p : partitions_of(k))
            for (const Partition &m : partitions_of(n - k))
                out.push_back({p, m});
    return out;
}

std::string show(const std::optional<int> &v) { return v ? std::to_string(*v) : "none"; }

void table_reproduction(Outcome &out, const char *id, const std::set<std::string> &exact) {
    const TableReport r = evaluate_table(table_fixture(id));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const RowResult &row = r.rows[i];
        for (const CellResult &c : row.cells) {
            const std::string where = "row " + std::to_string(i + 1) + " " + c.column + ": computed " +
                                      show(c.computed) + ", table " + show(c.expected);
            if (c.status == "fixture") {
                out.expect(!c.computed && c.expected, where + " (echo column)");
            } else if (c.status == "mismatch-known") {
                out.note(where + " (known mismatch, reported)");
                ++out.checks;
            } else {
                out.expect(exact.count(c.column) && c.status == "match", where);
            }
        }
    }
}

void criterion1(Outcome &out) {
    table_reproduction(out, "murnaghan", {"D1", "DB", "Dm", "Dreal", "DBOR2"});
    const auto &rows = table_fixture("murnaghan").rows;
    const TripleQuery q{rows[0].lambda, rows[0].mu, rows[0].nu, Family::Murnaghan};
    out.expect(bound_DBOR2(q) == 5, "row 1 closed-form DBOR2 should be 5");
}

void criterion2(Outcome &out) { table_reproduction(out, "squares", {"D2", "Dreal"}); }

void criterion3(Outcome &out) {
    for (const char *id : {"murnaghan", "squares"}) {
        const TableFixture &t = table_fixture(id);
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const FixtureRow &row = t.rows[i];
            const TripleQuery q{row.lambda, row.mu, row.nu, t.family};
            const BoundReport b = bound_report(q);
            int top = 0;
            for (const auto &[name, v] : b.computed())
                top = std::max(top, v);
            StabilizationQuery s = certified_query(q);
            s.margin = 3 + top - s.certified_bound;
            const StabilizationResult dr = d_real(s);
            const auto &seq = dr.sequence;
            for (const auto &[name, v] : b.computed()) {
                bool constant = true;
                for (int d = v + 1; d <= v + 3; ++d)
                    constant = constant && equal(seq[static_cast<std::size_t>(d)], seq[static_cast<std::size_t>(v)]);
                const std::string where = std::string(id) + " row " + std::to_string(i + 1) + " " + name + " = " +
                                          std::to_string(v);
                out.expect(constant, where + ": sequence moves within [B, B+3]");
                out.expect(dr.d_real <= v, where + ": D_real " + std::to_string(dr.d_real) + " exceeds the bound");
            }
            evict_character_caches();
        }
    }
}

std::vector<std::array<const Partition *, 3>> admissible_orderings(const TripleQuery &q) {
    const Partition *t[3] = {&q.lambda, &q.mu, &q.nu};
    std::vector<std::array<const Partition *, 3>> out;
    int idx[3] = {0, 1, 2};
    do {
        if (t[idx[0]]->length() >= 2 && t[idx[1]]->length() >= 2)
            out.push_back({t[idx[0]], t[idx[1]], t[idx[2]]});
    } while (std::next_permutation(idx, idx + 3));
    return out;
}

void criterion4(Outcome &out) {
    const TableFixture &m = table_fixture("murnaghan");
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        const FixtureRow &row = m.rows[i];
        const TripleQuery q{row.lambda, row.mu, row.nu, Family::Murnaghan};
        const std::string r = "murnaghan row " + std::to_string(i + 1);
        out.expect(hm_bound(tau0_murnaghan(q.lambda, q.mu, q.nu)) == bound_D1(q, false), r + ": tau0 vs D1");
        int best_b = bound_DB(q, true), best_bor2 = bound_DBOR2(q);
        for (const auto &o : admissible_orderings(q)) {
            const int hb = hm_bound(tau_B(*o[0], *o[1], *o[2]));
            const int hbor2 = hm_bound(tau_BOR2(*o[0], *o[1], *o[2]));
            out.expect(hb == stable_from(db_improved_numerator(*o[0], *o[1], *o[2]), 1), r + ": tau_B ordering");
            out.expect(hbor2 == stable_from(dbor2_improved_numerator(*o[0], *o[1], *o[2]), 2),
                       r + ": tau_BOR2 ordering");
            best_b = std::min(best_b, hb);
            best_bor2 = std::min(best_bor2, hbor2);
        }
        out.expect(best_b == bound_DB_improved(q), r + ": tau_B vs improved D_B");
        out.expect(best_bor2 == bound_DBOR2_improved(q), r + ": tau_BOR2 vs improved D_BOR2");
    }
    const TableFixture &s = table_fixture("squares");
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const FixtureRow &row = s.rows[i];
        out.expect(hm_bound_squares(row.lambda, row.mu, row.nu) ==
                       bound_D2({row.lambda, row.mu, row.nu, Family::Squares}, false),
                   "squares row " + std::to_string(i + 1) + ": max(tau1, tau2) vs D2");
    }
}

void criterion5(Outcome &out) {
    for (int n = 1; n <= 9; ++n) {
        const auto shapes = partitions_of(n);
        for (const Partition &a : shapes)
            for (const Partition &b : shapes) {
                mpq_class sum = 0;
                for (const Partition &rho : shapes)
                    sum += mpq_class(to_mpz(character(a, rho)) * to_mpz(character(b, rho))) / z_order(rho);
                out.expect(sum == (a == b ? 1 : 0), "orthogonality " + format_partition(a) + " " + format_partition(b));
            }
    }
    for (int n = 1; n <= 7; ++n) {
        const auto shapes = partitions_of(n);
        const Partition one(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const Partition &a : shapes)
            for (const Partition &b : shapes) {
                out.expect(kron(a, b, Partition{n}) == (a == b ? 1 : 0), "trivial factor");
                out.expect(kron(a, b, one) == (a == conjugate(b) ? 1 : 0), "sign factor");
                mpz_class sum = 0;
                for (const Partition &c : shapes) {
                    const mpz_class g = kron(a, b, c);
                    sum += g * dim_sn(c);
                    if (n <= 6)
                        out.expect(kron(a, c, b) == g && kron(b, a, c) == g && kron(b, c, a) == g &&
                                       kron(c, a, b) == g && kron(c, b, a) == g,
                                   "S3 symmetry " + format_triple(a, b, c));
                }
                out.expect(sum == dim_sn(a) * dim_sn(b), "kron dimension " + format_partition(a));
            }
    }
    for (int x = 0; x <= 6; ++x)
        for (int y = 0; x + y <= 6; ++y)
            for (const Partition &l : partitions_of(x))
                for (const Partition &m : partitions_of(y)) {
                    mpz_class sum = 0;
                    for (const auto &[nu, c] : schur_product_expand(l, m))
                        sum += c * dim_gl(nu, 4);
                    out.expect(sum == dim_gl(l, 4) * dim_gl(m, 4), "lr dimension");
                }
    for (int x = 1; x <= 8; ++x)
        for (int y = 1; x * y <= 8; ++y)
            for (const Partition &l : partitions_of(x))
                for (const Partition &m : partitions_of(y)) {
                    mpz_class sum = 0;
                    for (const auto &[nu, c] : plethysm_schur(l, m))
                        sum += c * dim_gl(nu, 3);
                    out.expect(sum == dim_gl(l, static_cast<int>(dim_gl(m, 3).get_si())), "plethysm dimension");
                }
    for (int n = 1; n <= 4; ++n) {
        const auto all = double_partitions(n);
        for (const auto &a : all)
            for (const auto &b : all) {
                mpz_class sum = 0;
                for (const auto &c : all)
                    sum += hyperoct_coeff(a, b, c) * dim_wreath(c);
                out.expect(sum == dim_wreath(a) * dim_wreath(b), "hyperoctahedral dimension");
            }
    }
}

void criterion6(Outcome &out) {
    for (int size = 1; size <= 4; ++size)
        for (const Partition &m : partitions_of(size))
            for (int d = 1; d <= 3; ++d) {
                out.expect(plethysm_coeff(Partition{d}, m, scale(m, d)) == 1,
                           "plethysm a^{d mu}_{(d),mu} for mu = " + format_partition(m));
                if (m.length() >= 2)
                    out.expect(plethysm_coeff(Partition{d}, m, Partition{d * size}) == 0,
                               "plethysm vanishing for mu = " + format_partition(m));
            }
    for (int d = 1; d <= 5; ++d)
        for (const Partition &l : partitions_of(d))
            for (const Partition &m : partitions_of(d))
                out.expect(lr(l, m, Partition{2 * d}) == (l == Partition{d} && m == Partition{d} ? 1 : 0),
                           "lr into (2d)");
    for (int d = 1; d <= 3; ++d) {
        const DoublePartition t{Partition{2 * d}, Partition{2 * d}};
        out.expect(hyperoct_coeff(t, t, t) == 1, "hyperoctahedral scaled ((2),(2)) at d = " + std::to_string(d));
    }
    for (int n = 1; n <= 4; ++n) {
        const auto shapes = partitions_of(n);
        for (const Partition &a : shapes)
            for (const Partition &b : shapes)
                for (const Partition &c : shapes)
                    out.expect(hyperoct_coeff({a, {}}, {b, {}}, {c, {}}) == kron(a, b, c), "hyperoct reduction");
    }
    std::mt19937 rng(2024);
    int sampled = 0;
    while (sampled < 20) {
        const int n = 4 + static_cast<int>(rng() % 14);
        const auto shapes = partitions_of(n);
        const Partition &a = shapes[rng() % shapes.size()], &b = shapes[rng() % shapes.size()],
                        &c = shapes[rng() % shapes.size()];
        if (a.length() < 2 || b.length() < 2)
            continue;
        ++sampled;
        out.expect(bound_hyperoct({a, {}}, {b, {}}, {c, {}}) == bound_D1({a, b, c, Family::Murnaghan}, false),
                   "hyperoctahedral bound reduction " + format_triple(a, b, c));
    }
}

void criterion7(Outcome &out) {
    for (int n = 1; n <= 4; ++n) {
        const auto shapes = partitions_of(n);
        for (const Partition &a : shapes)
            for (const Partition &b : shapes)
                for (const Partition &c : shapes)
                    out.expect(kron(a, b, c) == oracle::group_kron(a, b, c), "kron oracle " + format_triple(a, b, c));
    }
    for (int n = 0; n <= 8; ++n)
        for (const Partition &nu : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition &l : partitions_of(n - k))
                    out.expect(lr(l, Partition(k ? std::vector<int>{k} : std::vector<int>{}), nu) ==
                                   oracle::pieri(l, k, nu),
                               "Pieri oracle");
    for (int x = 0; x <= 4; ++x)
        for (int y = 0; x + y <= 6; ++y)
            for (const Partition &l : partitions_of(x))
                for (const Partition &m : partitions_of(y))
                    for (const Partition &nu : partitions_of(x + y))
                        out.expect(lr(l, m, nu) == oracle::poly_lr(l, m, nu), "tableau oracle " + format_triple(l, m, nu));
    for (int n = 1; n <= 3; ++n) {
        const auto all = double_partitions(n);
        for (const auto &a : all)
            for (const auto &b : all)
                for (const auto &c : all)
                    out.expect(hyperoct_coeff(a, b, c) == oracle::wreath_coeff(a, b, c), "wreath oracle");
    }
    for (int x = 1; x <= 6; ++x)
        for (int y = 1; x * y <= 6; ++y)
            for (const Partition &l : partitions_of(x))
                for (const Partition &m : partitions_of(y)) {
                    const auto expected = oracle::diagonal_plethysm(l, m);
                    const auto got = plethysm_schur(l, m);
                    bool same = got.size() == expected.size();
                    for (const auto &[nu, c] : expected)
                        same = same && plethysm_coeff(l, m, nu) == c;
                    out.expect(same, "plethysm oracle " + format_partition(l) + " o " + format_partition(m));
                }
}

struct Criterion {
    int id;
    const char *title;
    std::function<void(Outcome &)> run;
};

} // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> all = {
        {1, "murnaghan table reproduction", criterion1},
        {2, "squares table reproduction", criterion2},
        {3, "bound soundness on both tables", criterion3},
        {4, "closed forms vs generic Hilbert-Mumford maximizer", criterion4},
        {5, "character and coefficient property suites", criterion5},
        {6, "family identities", criterion6},
        {7, "oracle equivalence", criterion7},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i)
        wanted.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const Criterion &c : all) {
        if (!wanted.empty() && !wanted.count(c.id))
            continue;
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(out);
        } catch (const std::exception &e) {
            out.ok = false;
            out.note(std::string("internal error: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << c.id << ": " << (out.ok ? "PASS" : "FAIL") << "  " << c.title << " ("
                  << out.checks << " checks, " << secs << " s)\n"
                  << out.detail.str() << std::flush;
        failed += !out.ok;
    }
    return failed ? 1 : 0;
}

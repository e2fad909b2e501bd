#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "kronstab/errors.hpp"
#include "kronstab/gitbounds.hpp"
#include "kronstab/hyperoctahedral.hpp"
#include "kronstab/kronecker.hpp"
#include "kronstab/plethysm.hpp"
#include "kronstab/report.hpp"
#include "kronstab/stabilization.hpp"

using namespace kronstab;

namespace {

void apply_thread_count() {
    const char *env = std::getenv("KRONSTAB_THREADS");
    if (!env)
        return;
    const int n = std::atoi(env);
    if (n <= 0)
        throw DomainError(std::string("KRONSTAB_THREADS must be a positive integer, got '") + env + "'");
    omp_set_num_threads(n);
}

TripleQuery triple_query(const std::string &family, const std::string &text) {
    const auto t = parse_triple(text);
    return {t[0], t[1], t[2], parse_family(family)};
}

void print_opt(const char *name, const std::optional<int> &v) {
    if (v)
        std::cout << name << " = " << *v << '\n';
}

int cmd_kron(const std::string &text) {
    const auto t = parse_triple(text);
    if (t[0].size() != t[1].size() || t[1].size() != t[2].size())
        throw DomainError("partitions of " + text + " have different sizes");
    std::cout << kron(t[0], t[1], t[2]) << "  (n = " << t[0].size() << ")\n";
    return 0;
}

int cmd_bound(const std::string &family, const std::string &text, bool reorder, bool all) {
    if (family == "hyperoct") {
        const auto t = parse_double_triple(text);
        const int d = bound_hyperoct(t[0], t[1], t[2]);
        std::cout << "D = " << d << '\n';
        return 0;
    }
    const TripleQuery q = triple_query(family, text);
    const BoundReport r = bound_report(q);
    if (q.family == Family::Squares) {
        std::cout << "D2 = " << (reorder ? *r.D2 : *r.D2_fixed) << '\n';
        if (all) {
            print_opt("D2 (given order)", r.D2_fixed);
            print_opt("D2 (best of swap)", r.D2);
            print_opt("D_hm", r.D_hm_generic);
        }
    } else {
        if (reorder || !r.D1_fixed)
            print_opt("D1", r.D1);
        else
            print_opt("D1", r.D1_fixed);
        if (all) {
            print_opt("D1 (given order)", r.D1_fixed);
            print_opt("D1 (reordered)", r.D1);
            print_opt("D_B", r.DB);
            print_opt("D_B improved", r.DB_improved);
            print_opt("D_BOR2", r.DBOR2);
            print_opt("D_BOR2 improved", r.DBOR2_improved);
            print_opt("D_hm", r.D_hm_generic);
            print_opt("D_m", r.Dm);
        }
    }
    for (const std::string &n : r.notes)
        std::cout << "note: " << n << '\n';
    return 0;
}

int cmd_dreal(const std::string &family, const std::string &text, int horizon, const std::string &direction) {
    const TripleQuery q = triple_query(family, text);
    StabilizationQuery sq;
    if (horizon >= 0 || !direction.empty()) {
        Direction dir = family_direction(q.family);
        if (!direction.empty()) {
            const auto t = parse_triple(direction);
            dir = {t[0], t[1], t[2]};
        }
        sq = empirical_query(q.lambda, q.mu, q.nu, dir, horizon >= 0 ? horizon : 8);
    } else {
        sq = certified_query(q);
    }
    const StabilizationResult r = d_real(sq);
    std::cout << "d_real = " << r.d_real << (r.empirical ? " (empirical)" : "") << '\n'
              << "limit = " << r.limit << '\n'
              << "certificate: " << r.certificate << '\n'
              << "sequence:";
    for (const mpz_class &v : r.sequence)
        std::cout << ' ' << v;
    std::cout << '\n';
    return 0;
}

int cmd_table(const std::string &id, const std::string &format) {
    const TableReport r = evaluate_table(table_fixture(id));
    if (format == "md")
        std::cout << emit_markdown(r);
    else if (format == "csv")
        std::cout << emit_csv(r);
    else
        std::cout << emit_json(r);
    return r.all_match() ? 0 : 1;
}

int cmd_plethysm(const std::string &text) {
    const auto t = parse_triple(text);
    std::cout << plethysm_coeff(t[0], t[1], t[2]) << '\n';
    return 0;
}

int cmd_hyperoct(const std::string &text) {
    const auto t = parse_double_triple(text);
    std::cout << hyperoct_coeff(t[0], t[1], t[2]) << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Kronecker, Littlewood-Richardson, plethysm and hyperoctahedral coefficients; stabilization bounds"};
    app.require_subcommand(1);

    std::string triple, family, format = "md", direction;
    bool reorder = false, all = false;
    int horizon = -1;

    auto *kron_cmd = app.add_subcommand("kron", "Kronecker coefficient of \"a / b / c\"");
    kron_cmd->add_option("triple", triple)->required();

    auto *bound_cmd = app.add_subcommand("bound", "Stabilization bounds of a triple");
    bound_cmd->add_option("family", family)->required()->check(CLI::IsMember({"murnaghan", "squares", "hyperoct"}));
    bound_cmd->add_option("triple", triple)->required();
    bound_cmd->add_flag("--reorder", reorder, "minimize over orderings (murnaghan) or the first two (squares)");
    bound_cmd->add_flag("--all", all, "print every bound");

    auto *dreal_cmd = app.add_subcommand("dreal", "First index from which the sequence is constant");
    dreal_cmd->add_option("family", family)->required()->check(CLI::IsMember({"murnaghan", "squares"}));
    dreal_cmd->add_option("triple", triple)->required();
    dreal_cmd->add_option("--horizon", horizon, "explore up to this index without a certificate")
        ->check(CLI::NonNegativeNumber);
    dreal_cmd->add_option("--direction", direction, "custom direction \"alpha / beta / gamma\" (uncertified)");

    auto *table_cmd = app.add_subcommand("table", "Recompute a published comparison table");
    table_cmd->add_option("id", triple, "murnaghan or squares")->required()->check(CLI::IsMember({"murnaghan", "squares"}));
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"md", "csv", "json"}));

    auto *pleth_cmd = app.add_subcommand("plethysm", "Coefficient of s_nu in s_lambda[s_mu], \"lambda / mu / nu\"");
    pleth_cmd->add_option("triple", triple)->required();

    auto *hyper_cmd = app.add_subcommand("hyperoct", "Hyperoctahedral coefficient, \"a+;a- / b+;b- / c+;c-\"");
    hyper_cmd->add_option("triple", triple)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        apply_thread_count();
        if (*kron_cmd)
            return cmd_kron(triple);
        if (*bound_cmd)
            return cmd_bound(family, triple, reorder, all);
        if (*dreal_cmd)
            return cmd_dreal(family, triple, horizon, direction);
        if (*table_cmd)
            return cmd_table(triple, format);
        if (*pleth_cmd)
            return cmd_plethysm(triple);
        if (*hyper_cmd)
            return cmd_hyperoct(triple);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "octachar/characters.hpp"
#include "octachar/hyperoctahedral.hpp"
#include "octachar/notation.hpp"
#include "octachar/parallel.hpp"
#include "octachar/partition.hpp"
#include "octachar/rational.hpp"
#include "octachar/symfunc.hpp"
#include "octachar/verify.hpp"

using namespace octachar;

namespace {

std::vector<Rat> parse_point(const std::string& text) {
    std::vector<Rat> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) values.push_back(parse_rational(item));
    if (values.empty()) throw std::invalid_argument("--at needs at least one value");
    return values;
}

int print_report(const Report& rep) {
    std::cout << (rep.passed() ? "PASS " : "FAIL ") << rep.name << ": " << rep.checked << " checked, "
              << rep.failed << " failed\n";
    for (const auto& c : rep.counterexamples) std::cout << "  counterexample: " << c << '\n';
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters of S_2n, S_2n+1 and B_n: basechange, norm and verification sweeps"};
    app.require_subcommand(1);
    unsigned jobs = 0;
    app.add_option("--jobs,-j", jobs, "Worker threads (default: OCTACHAR_JOBS or hardware concurrency)");

    int exit_code = 0;

    auto* cmd_char = app.add_subcommand("char", "Character value Θ_λ(ρ) in S_m");
    std::string lambda_text, rho_text;
    cmd_char->add_option("lambda", lambda_text, "Irreducible, e.g. [3,2,1^4]")->required();
    cmd_char->add_option("rho", rho_text, "Cycle type")->required();
    cmd_char->callback([&] {
        std::cout << format_int128(mn_character(parse_partition(lambda_text), ConjClass(parse_partition(rho_text))))
                  << '\n';
    });

    auto* cmd_table_m = app.add_subcommand("chartable", "Full character table of S_m as TSV");
    int table_m = 0;
    cmd_table_m->add_option("m", table_m, "Degree")->required()->check(CLI::Range(0, 40));
    cmd_table_m->callback([&] {
        const auto ps = partitions_of(table_m);
        std::cout << "lambda";
        for (const auto& rho : ps) std::cout << '\t' << format_partition(rho);
        std::cout << '\n';
        for (const auto& lambda : ps) {
            std::cout << format_partition(lambda);
            for (const auto& rho : ps) std::cout << '\t' << format_int128(mn_character(lambda, ConjClass(rho)));
            std::cout << '\n';
        }
    });

    auto* cmd_bc = app.add_subcommand("basechange", "Partition of 2n or 2n+1 attached to a bipartition");
    std::string bip_text, target_text = "even";
    cmd_bc->add_option("pi", bip_text, "Bipartition, e.g. ([2,1]|[1])")->required();
    cmd_bc->add_option("--target", target_text, "even or odd")->check(CLI::IsMember({"even", "odd"}));
    cmd_bc->callback([&] {
        std::cout << format_partition(basechange(parse_bipartition(bip_text), parse_target(target_text))) << '\n';
    });

    auto* cmd_pre = app.add_subcommand("preimage", "Bipartition whose basechange is lambda");
    cmd_pre->add_option("lambda", lambda_text, "Partition with 2-core [] or [1]")->required();
    cmd_pre->callback(
        [&] { std::cout << format_bipartition(basechange_preimage(parse_partition(lambda_text))) << '\n'; });

    auto* cmd_norm = app.add_subcommand("norm", "B_n class (positive|negative cycles) of an admissible cycle type");
    std::string cycle_text;
    cmd_norm->add_option("w", cycle_text, "Cycle type in S_2n or S_2n+1")->required();
    cmd_norm->callback([&] {
        const Partition w = parse_partition(cycle_text);
        const BnClass c = norm(ConjClass(w), w.size() % 2 == 0 ? Target::even : Target::odd);
        std::cout << format_bipartition({c.positive_cycles, c.negative_cycles}) << '\n';
    });

    auto* cmd_quot = app.add_subcommand("quotient", "p-core and p-quotient");
    int p = 2;
    cmd_quot->add_option("lambda", lambda_text, "Partition")->required();
    cmd_quot->add_option("--p", p, "Modulus")->check(CLI::Range(2, 64));
    cmd_quot->callback([&] {
        const Partition lambda = parse_partition(lambda_text);
        const int residue = p == 2 ? lambda.size() % 2 : 0;
        const auto cq = core_quotient(lambda, p, residue);
        std::cout << "core " << format_partition(cq.core) << "\nquotient";
        for (const auto& q : cq.quotient) std::cout << ' ' << format_partition(q);
        std::cout << '\n';
    });

    auto* cmd_sign = app.add_subcommand("sign", "Sign ε(λ) of a partition with 2-core [] or [1]");
    cmd_sign->add_option("lambda", lambda_text, "Partition")->required();
    cmd_sign->callback([&] {
        const Partition lambda = parse_partition(lambda_text);
        std::cout << to_int(sign_shuffle(lambda)) << '\n';
    });

    auto* cmd_schur = app.add_subcommand("schur", "Exact value of s_λ at a rational point");
    std::string at_text;
    cmd_schur->add_option("lambda", lambda_text, "Partition")->required();
    cmd_schur->add_option("--at", at_text, "Comma-separated rationals, e.g. 1,-2,3/4")->required();
    cmd_schur->callback([&] {
        std::cout << format_rational(schur_eval(parse_partition(lambda_text), parse_point(at_text))) << '\n';
    });

    auto* cmd_verify = app.add_subcommand("verify", "Seeded Schur identity checks");
    std::string which;
    int max_size = 4, points = 5;
    std::uint64_t seed = 1;
    cmd_verify->add_option("identity", which, "frobenius, even-fact or odd-fact")
        ->required()
        ->check(CLI::IsMember({"frobenius", "even-fact", "odd-fact"}));
    cmd_verify->add_option("--max-size", max_size, "Largest m (frobenius) or n (factorizations)")
        ->check(CLI::Range(0, 12));
    cmd_verify->add_option("--seed", seed, "Seed for the random points");
    cmd_verify->add_option("--points", points, "Points per size")->check(CLI::Range(1, 1000));
    cmd_verify->callback([&] {
        std::cout << "verify " << which << " max-size=" << max_size << " points=" << points << " seed=" << seed
                  << '\n';
        Report rep;
        if (which == "frobenius") rep = frobenius_sweep(max_size, points, seed, jobs);
        else if (which == "even-fact") rep = even_factorization_sweep(max_size, points, seed, jobs);
        else rep = odd_factorization_sweep(max_size, points, seed, jobs);
        exit_code = print_report(rep);
    });

    auto* cmd_table = app.add_subcommand("table", "Correspondence table S_2n <-> S_2n+1");
    int table_n = 4;
    bool as_json = false, as_tsv = false;
    cmd_table->add_option("--n", table_n, "n")->check(CLI::Range(1, 12));
    auto* json_flag = cmd_table->add_flag("--json", as_json, "One JSON object per line");
    cmd_table->add_flag("--tsv", as_tsv, "Tab-separated")->excludes(json_flag);
    cmd_table->callback([&] {
        const auto table = build_table(table_n);
        if (as_json) std::cout << table_json_lines(table);
        else if (as_tsv) std::cout << table_tsv(table);
        else std::cout << table_text(table);
    });

    auto* cmd_census = app.add_subcommand("census", "Signs of Θ_λ(w0) over all λ ⊢ m");
    int census_m = 20;
    cmd_census->add_option("--m", census_m, "m")->check(CLI::Range(2, 40));
    cmd_census->callback([&] {
        const auto c = sign_census(census_m, jobs);
        std::cout << c.total() << " total, " << c.num_positive << " positive, " << c.num_negative << " negative, "
                  << c.num_zero << " zero\n";
    });

    auto* cmd_dims = app.add_subcommand("dims", "Compare B_n dimensions with |Θ(w0)| on the basechange image");
    int dims_n = 1;
    cmd_dims->add_option("--n", dims_n, "n")->check(CLI::Range(1, 20));
    cmd_dims->add_option("--target", target_text, "even or odd")->check(CLI::IsMember({"even", "odd"}));
    cmd_dims->callback([&] {
        const bool ok = dimension_match(dims_n, parse_target(target_text));
        std::cout << (ok ? "PASS" : "FAIL") << " n=" << dims_n << " target=" << target_text << ": "
                  << bipartitions_of(dims_n).size() << " B_n dimensions "
                  << (ok ? "match" : "do not match") << " |Θ(w0)|\n";
        exit_code = ok ? 0 : 1;
    });

    auto* cmd_sweep = app.add_subcommand("sweep", "Main theorem, vanishing, sign and factorization sweeps");
    int sweep_max = 4;
    cmd_sweep->add_option("--max", sweep_max, "Largest n")->check(CLI::Range(1, 7));
    cmd_sweep->add_option("--seed", seed, "Seed for the factorization points");
    cmd_sweep->callback([&] {
        std::cout << "sweep max=" << sweep_max << " seed=" << seed << '\n';
        const int fact_max = std::min(sweep_max, 5);
        const Report reports[] = {
            main_theorem_sweep(sweep_max, jobs),
            littlewood_sweep(2 * sweep_max, 2 * sweep_max + 1, jobs),
            sign_agreement_sweep(2 * sweep_max + 1),
            even_factorization_sweep(fact_max, 3, seed, jobs),
            odd_factorization_sweep(fact_max, 3, seed, jobs),
        };
        for (const auto& rep : reports) exit_code |= print_report(rep);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

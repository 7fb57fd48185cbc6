#include "octachar/verify.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "octachar/notation.hpp"
#include "octachar/parallel.hpp"
#include "octachar/symfunc.hpp"

namespace octachar {

namespace {

constexpr std::size_t kMaxCounterexamples = 20;

std::string sign_text(Sign s) {
    return s == Sign::positive ? "+1" : "-1";
}

long long to_json_int(CharValue v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("character value does not fit a JSON integer");
    return static_cast<long long>(v);
}

}  // namespace

CorrespondenceTable build_table(int n) {
    if (n < 1) throw std::invalid_argument("table size n must be at least 1");
    CorrespondenceTable table;
    table.n = n;
    const ConjClass w0_even = w0_class(2 * n);
    const ConjClass w0_odd = w0_class(2 * n + 1);
    for (const BiPartition& pi : bipartitions_of(n)) {
        CorrespondenceRow row;
        row.quotient = pi;
        row.lambda_even = basechange(pi, Target::even);
        row.lambda_odd = basechange(pi, Target::odd);
        row.theta_even = mn_character(row.lambda_even, w0_even);
        row.theta_odd = mn_character(row.lambda_odd, w0_odd);
        row.sign_even = sign_shuffle(row.lambda_even);
        row.sign_odd = sign_shuffle(row.lambda_odd);
        row.bn_dim = bn_dimension(pi);
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const auto& a, const auto& b) { return a.lambda_even < b.lambda_even; });
    for (const Partition& lambda : partitions_of(2 * n))
        if (mn_character(lambda, w0_even) == 0) table.excluded_even.push_back(lambda);
    for (const Partition& lambda : partitions_of(2 * n + 1))
        if (mn_character(lambda, w0_odd) == 0) table.excluded_odd.push_back(lambda);
    return table;
}

std::string table_tsv(const CorrespondenceTable& table) {
    std::ostringstream out;
    out << "lambda_even\tlambda_odd\ttheta_even\ttheta_odd\tsign_even\tsign_odd\tbn_dim\n";
    for (const auto& r : table.rows) {
        out << format_partition(r.lambda_even) << '\t' << format_partition(r.lambda_odd) << '\t'
            << format_int128(r.theta_even) << '\t' << format_int128(r.theta_odd) << '\t'
            << sign_text(r.sign_even) << '\t' << sign_text(r.sign_odd) << '\t'
            << format_int128(r.bn_dim) << '\n';
    }
    const auto list = [&](const char* label, const std::vector<Partition>& ps) {
        out << label;
        for (const auto& p : ps) out << '\t' << format_partition(p);
        out << '\n';
    };
    list("excluded_even", table.excluded_even);
    list("excluded_odd", table.excluded_odd);
    return out.str();
}

std::string table_text(const CorrespondenceTable& table) {
    std::ostringstream out;
    out << "S" << 2 * table.n << " <-> S" << 2 * table.n + 1 << " via B" << table.n << " ("
        << table.rows.size() << " rows)\n";
    std::size_t width = 0;
    for (const auto& r : table.rows) width = std::max(width, format_partition(r.lambda_even).size());
    for (const auto& r : table.rows) {
        const std::string left = format_partition(r.lambda_even);
        out << left << std::string(width - left.size(), ' ') << " -> "
            << format_partition(r.lambda_odd) << "  theta(w0)=" << format_int128(r.theta_even)
            << "  theta'(w0)=" << format_int128(r.theta_odd) << "  dim=" << format_int128(r.bn_dim)
            << "  quotient=" << format_bipartition(r.quotient) << '\n';
    }
    const auto list = [&](const std::string& label, const std::vector<Partition>& ps) {
        out << label << ':';
        for (const auto& p : ps) out << ' ' << format_partition(p);
        out << '\n';
    };
    list("zero at w0 in S" + std::to_string(2 * table.n), table.excluded_even);
    list("zero at w0 in S" + std::to_string(2 * table.n + 1), table.excluded_odd);
    return out.str();
}

std::string table_json_lines(const CorrespondenceTable& table) {
    std::ostringstream out;
    for (const auto& r : table.rows) {
        nlohmann::ordered_json row;
        row["quotient"] = format_bipartition(r.quotient);
        row["lambda_even"] = format_partition(r.lambda_even);
        row["lambda_odd"] = format_partition(r.lambda_odd);
        row["theta_even"] = to_json_int(r.theta_even);
        row["theta_odd"] = to_json_int(r.theta_odd);
        row["sign_even"] = to_int(r.sign_even);
        row["sign_odd"] = to_int(r.sign_odd);
        row["bn_dim"] = to_json_int(r.bn_dim);
        out << row.dump() << '\n';
    }
    nlohmann::ordered_json excluded;
    excluded["excluded_even"] = nlohmann::json::array();
    excluded["excluded_odd"] = nlohmann::json::array();
    for (const auto& p : table.excluded_even) excluded["excluded_even"].push_back(format_partition(p));
    for (const auto& p : table.excluded_odd) excluded["excluded_odd"].push_back(format_partition(p));
    out << excluded.dump() << '\n';
    return out.str();
}

SignCensus sign_census(int m, unsigned jobs) {
    if (m < 2) throw std::invalid_argument("census degree m must be at least 2");
    const auto lambdas = partitions_of(m);
    const ConjClass w0 = w0_class(m);
    std::vector<CharValue> values(lambdas.size());
    parallel_for(lambdas.size(), jobs, [&](std::size_t i) { values[i] = mn_character(lambdas[i], w0); });
    SignCensus census;
    census.m = m;
    for (CharValue v : values) {
        if (v > 0) ++census.num_positive;
        else if (v < 0) ++census.num_negative;
        else ++census.num_zero;
    }
    return census;
}

bool dimension_match(int n, Target target) {
    const int m = target == Target::even ? 2 * n : 2 * n + 1;
    const ConjClass w0 = w0_class(m);
    std::vector<CharValue> dims, thetas;
    for (const BiPartition& pi : bipartitions_of(n)) {
        dims.push_back(bn_dimension(pi));
        const CharValue theta = mn_character(basechange(pi, target), w0);
        thetas.push_back(theta < 0 ? -theta : theta);
    }
    std::sort(dims.begin(), dims.end());
    std::sort(thetas.begin(), thetas.end());
    return dims == thetas;
}

void Report::fail(std::string what) {
    ++failed;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(what));
}

void Report::merge(const Report& other) {
    checked += other.checked;
    failed += other.failed;
    for (const auto& c : other.counterexamples)
        if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(c);
}

namespace {

// Runs fn(i, report_i) in parallel and merges the per-item reports in index order.
template <typename Fn>
Report parallel_report(std::string name, std::size_t count, unsigned jobs, Fn&& fn) {
    std::vector<Report> parts(count);
    parallel_for(count, jobs, [&](std::size_t i) { fn(i, parts[i]); });
    Report total;
    total.name = std::move(name);
    for (const auto& p : parts) total.merge(p);
    return total;
}

}  // namespace

Report main_theorem_sweep(int n_max, unsigned jobs, int bruteforce_max) {
    if (n_max > 7) throw std::invalid_argument("main theorem sweep is limited to n <= 7");
    Report total;
    total.name = "main theorem";
    for (int n = 1; n <= n_max; ++n) {
        const auto pis = bipartitions_of(n);
        for (Target target : {Target::even, Target::odd}) {
            const int m = target == Target::even ? 2 * n : 2 * n + 1;
            const auto classes = admissible_classes(m);
            Report part = parallel_report("", pis.size(), jobs, [&](std::size_t i, Report& rep) {
                const BiPartition& pi = pis[i];
                const Partition lambda = basechange(pi, target);
                const Sign eps = sign_shuffle(lambda);
                for (const ConjClass& w : classes) {
                    const BnClass normed = norm(w, target);
                    const CharValue lhs = mn_character(lambda, w);
                    const CharValue bn_side = bn_character_positive(pi, normed);
                    ++rep.checked;
                    if (lhs != to_int(eps) * bn_side)
                        rep.fail("Theta(" + format_partition(lambda) + ")(" +
                                 format_partition(w.cycle_type()) + ") = " + format_int128(lhs) +
                                 " but eps * Theta" + format_bipartition(pi) + "(Nm w) = " +
                                 format_int128(to_int(eps) * bn_side));
                    if (n <= bruteforce_max && target == Target::even) {
                        const CharValue brute = bn_character_bruteforce(pi, normed);
                        if (brute != bn_side)
                            rep.fail("B" + std::to_string(n) + " character " + format_bipartition(pi) +
                                     " at positive class " + format_partition(normed.positive_cycles) +
                                     ": class fusion " + format_int128(bn_side) + ", brute force " +
                                     format_int128(brute));
                    }
                }
            });
            total.merge(part);

            // Injectivity and image = {λ : Θ_λ(w₀) ≠ 0}.
            std::set<Partition> image;
            for (const auto& pi : pis) image.insert(basechange(pi, target));
            if (image.size() != pis.size())
                total.fail("basechange to S" + std::to_string(m) + " is not injective");
            const ConjClass w0 = w0_class(m);
            std::set<Partition> nonzero;
            for (const Partition& lambda : partitions_of(m))
                if (mn_character(lambda, w0) != 0) nonzero.insert(lambda);
            if (nonzero != image)
                total.fail("image of basechange to S" + std::to_string(m) +
                           " differs from the set of characters nonzero at w0");
        }
    }
    return total;
}

Report littlewood_sweep(int max_even, int max_odd, unsigned jobs) {
    Report total;
    total.name = "Littlewood vanishing and factorization";
    for (int m = 0; m <= std::max(max_even, max_odd); ++m) {
        if ((m % 2 == 0 && m > max_even) || (m % 2 == 1 && m > max_odd)) continue;
        const auto lambdas = partitions_of(m);
        const auto classes = admissible_classes(m);
        Report part = parallel_report("", lambdas.size(), jobs, [&](std::size_t i, Report& rep) {
            const Partition& lambda = lambdas[i];
            const bool eligible = has_basechange_core(lambda);
            std::pair<Partition, Partition> q;
            Sign eps = Sign::positive;
            if (eligible) {
                q = two_quotient(lambda);
                eps = sign_shuffle(lambda);
            }
            for (const ConjClass& w : classes) {
                const CharValue theta = mn_character(lambda, w);
                ++rep.checked;
                if (!eligible) {
                    if (theta != 0)
                        rep.fail("Theta(" + format_partition(lambda) + ")(" +
                                 format_partition(w.cycle_type()) + ") = " + format_int128(theta) +
                                 " but the 2-core is " + format_partition(p_core(lambda, 2)));
                    continue;
                }
                std::vector<int> halved;
                for (int x : w.cycle_type().parts())
                    if (x > 1) halved.push_back(x / 2);
                const CharValue induced = product_character(q.first, q.second, ConjClass(Partition(halved)));
                if (theta != to_int(eps) * induced)
                    rep.fail("Theta(" + format_partition(lambda) + ")(" + format_partition(w.cycle_type()) +
                             ") = " + format_int128(theta) + " but eps * induced = " +
                             format_int128(to_int(eps) * induced));
            }
        });
        total.merge(part);
    }
    return total;
}

Report sign_agreement_sweep(int max_size) {
    Report rep;
    rep.name = "sign agreement";
    for (int m = 0; m <= max_size; ++m) {
        for_each_partition(m, [&](const Partition& lambda) {
            if (!has_basechange_core(lambda)) return;
            ++rep.checked;
            const Sign a = sign_shuffle(lambda);
            const Sign b = sign_odd_parts(lambda);
            if (a != b)
                rep.fail(format_partition(lambda) + ": shuffle sign " + sign_text(a) + ", odd-part sign " +
                         sign_text(b));
        });
    }
    return rep;
}

Rat random_small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 20), den(1, 20), sign(0, 1);
    Rat r(num(rng) * (sign(rng) ? -1 : 1), den(rng));
    r.canonicalize();
    return r;
}

std::vector<Rat> random_plain_point(std::size_t arity, std::mt19937_64& rng) {
    std::vector<Rat> values;
    std::set<Rat> seen;
    while (values.size() < arity) {
        Rat r = random_small_rational(rng);
        if (seen.insert(r).second) values.push_back(r);
    }
    return values;
}

std::vector<Rat> random_mirror_base(std::size_t m, std::mt19937_64& rng, std::size_t extra_count) {
    std::vector<Rat> values;
    std::set<Rat> seen_abs;
    while (values.size() < m + extra_count) {
        Rat r = random_small_rational(rng);
        if (seen_abs.insert(abs(r)).second) values.push_back(r);
    }
    return values;
}

Report frobenius_sweep(int max_m, int points, std::uint64_t seed, unsigned jobs) {
    std::mt19937_64 rng(seed);
    Report total;
    total.name = "Frobenius expansion";
    for (int m = 1; m <= max_m; ++m) {
        std::vector<PointSpec> pts;
        for (int k = 0; k < points; ++k)
            pts.push_back(PointSpec::plain(random_plain_point(static_cast<std::size_t>(m), rng)));
        const auto lambdas = partitions_of(m);
        total.merge(parallel_report("", lambdas.size(), jobs, [&](std::size_t i, Report& rep) {
            for (const auto& pt : pts) {
                ++rep.checked;
                if (!verify_frobenius(lambdas[i], pt))
                    rep.fail("Frobenius expansion fails for " + format_partition(lambdas[i]));
            }
        }));
    }
    return total;
}

Report even_factorization_sweep(int n_max, int points, std::uint64_t seed, unsigned jobs) {
    std::mt19937_64 rng(seed);
    Report total;
    total.name = "factorization at (X,-X)";
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::vector<Rat>> bases;
        for (int k = 0; k < points; ++k) bases.push_back(random_mirror_base(static_cast<std::size_t>(n), rng));
        const auto lambdas = partitions_of(2 * n);
        total.merge(parallel_report("", lambdas.size(), jobs, [&](std::size_t i, Report& rep) {
            for (const auto& base : bases) {
                ++rep.checked;
                const auto check = check_factorization_even(lambdas[i], base);
                if (!check.holds())
                    rep.fail(format_partition(lambdas[i]) + ": s(X,-X) = " + format_rational(check.lhs) +
                             ", predicted " + format_rational(check.rhs));
            }
        }));
    }
    return total;
}

Report odd_factorization_sweep(int n_max, int points, std::uint64_t seed, unsigned jobs) {
    std::mt19937_64 rng(seed);
    Report total;
    total.name = "factorization at (X,-X,x)";
    std::uint64_t case_a = 0, case_b = 0;
    std::mutex count_mutex;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::vector<Rat>> bases;
        for (int k = 0; k < points; ++k)
            bases.push_back(random_mirror_base(static_cast<std::size_t>(n), rng, 1));
        std::vector<Partition> lambdas = partitions_of(2 * n + 1);
        if (n > 0) {
            auto even = partitions_of(2 * n);
            lambdas.insert(lambdas.end(), even.begin(), even.end());
        }
        total.merge(parallel_report("", lambdas.size(), jobs, [&](std::size_t i, Report& rep) {
            std::uint64_t a = 0, b = 0;
            for (const auto& values : bases) {
                const std::vector<Rat> base(values.begin(), values.end() - 1);
                ++rep.checked;
                const auto check = check_factorization_odd(lambdas[i], base, values.back());
                a += check.which == FactorCase::odd_a;
                b += check.which == FactorCase::odd_b;
                if (!check.holds())
                    rep.fail(format_partition(lambdas[i]) + ": s(X,-X,x) = " + format_rational(check.lhs) +
                             ", predicted " + format_rational(check.rhs));
            }
            std::lock_guard lock(count_mutex);
            case_a += a;
            case_b += b;
        }));
    }
    if (case_a == 0) total.fail("case (a) never exercised");
    if (case_b == 0) total.fail("case (b) never exercised");
    return total;
}

}  // namespace octachar

#pragma once

// Harnesses that rebuild the S_8/S_9 correspondence table, the w₀ sign
// census, and exhaustive sweeps of the character identities.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "octachar/characters.hpp"
#include "octachar/hyperoctahedral.hpp"
#include "octachar/rational.hpp"

namespace octachar {

struct CorrespondenceRow {
    BiPartition quotient;
    Partition lambda_even;   // ⊢ 2n, empty 2-core
    Partition lambda_odd;    // ⊢ 2n+1, 2-core (1)
    CharValue theta_even = 0;  // Θ_{lambda_even}(w₀)
    CharValue theta_odd = 0;   // Θ_{lambda_odd}(w₀)
    Sign sign_even = Sign::positive;
    Sign sign_odd = Sign::positive;
    CharValue bn_dim = 0;
};

struct CorrespondenceTable {
    int n = 0;
    std::vector<CorrespondenceRow> rows;   // sorted by lambda_even
    std::vector<Partition> excluded_even;  // λ ⊢ 2n with Θ_λ(w₀) = 0
    std::vector<Partition> excluded_odd;   // λ ⊢ 2n+1 with Θ_λ(w₀) = 0
};

CorrespondenceTable build_table(int n);

/// Header line plus one line per row:
/// lambda_even  lambda_odd  theta_even  theta_odd  sign_even  sign_odd  bn_dim
/// followed by "excluded_even" / "excluded_odd" lines.
std::string table_tsv(const CorrespondenceTable& table);
std::string table_text(const CorrespondenceTable& table);
/// One JSON object per line.
std::string table_json_lines(const CorrespondenceTable& table);

struct SignCensus {
    int m = 0;
    std::uint64_t num_positive = 0;
    std::uint64_t num_negative = 0;
    std::uint64_t num_zero = 0;

    std::uint64_t total() const { return num_positive + num_negative + num_zero; }
};

/// Signs of Θ_λ(w₀) over all λ ⊢ m.
SignCensus sign_census(int m, unsigned jobs = 0);

/// Multiset {bn_dimension(π) : π ⊢ n} equals {|Θ_λ(w₀)| : λ = basechange(π, target)}.
bool dimension_match(int n, Target target);

/// Outcome of a sweep: number of identities checked and the failures found.
struct Report {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> counterexamples;  // first few only

    bool passed() const { return failed == 0 && checked > 0; }
    void fail(std::string what);
    void merge(const Report& other);
};

/// Θ(BC(π))(w) = ε(BC(π)) Θ(π)(Nm w) for every bipartition π of 1 ≤ n ≤ n_max,
/// both targets and every admissible w. For n ≤ bruteforce_max the B_n side is
/// also recomputed by bn_character_bruteforce. Also checks that basechange is
/// injective and that its image is exactly {λ : Θ_λ(w₀) ≠ 0}.
Report main_theorem_sweep(int n_max, unsigned jobs = 0, int bruteforce_max = 4);

/// Vanishing and ε-signed factorization of Θ_λ on admissible classes, for all
/// λ ⊢ m with m ≤ max_even (even m) or m ≤ max_odd (odd m).
Report littlewood_sweep(int max_even, int max_odd, unsigned jobs = 0);

/// sign_shuffle(λ) == sign_odd_parts(λ) for every eligible λ with |λ| ≤ max_size.
Report sign_agreement_sweep(int max_size);

/// verify_frobenius for all λ ⊢ m, 1 ≤ m ≤ max_m, at `points` seeded points.
Report frobenius_sweep(int max_m, int points, std::uint64_t seed, unsigned jobs = 0);
/// verify_factorization_even for all λ ⊢ 2n, 1 ≤ n ≤ n_max, with |X| = n.
Report even_factorization_sweep(int n_max, int points, std::uint64_t seed, unsigned jobs = 0);
/// verify_factorization_odd for all λ ⊢ 2n+1 (case (a) and vanishing) and all
/// λ ⊢ 2n (case (b)), 0 ≤ n ≤ n_max, with |X| = n. Fails if either case never occurs.
Report odd_factorization_sweep(int n_max, int points, std::uint64_t seed, unsigned jobs = 0);

/// Rationals p/q with 1 ≤ |p|, q ≤ 20.
Rat random_small_rational(std::mt19937_64& rng);
/// Pairwise-distinct values.
std::vector<Rat> random_plain_point(std::size_t arity, std::mt19937_64& rng);
/// Values with pairwise-distinct nonzero absolute values, so that (X, −X) is
/// a valid bialternant point. `extra_count` additional such values are
/// appended (used for the trailing x of (X, −X, x)).
std::vector<Rat> random_mirror_base(std::size_t m, std::mt19937_64& rng, std::size_t extra_count = 0);

}  // namespace octachar

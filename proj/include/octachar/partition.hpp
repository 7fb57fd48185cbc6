#pragma once

// Integer partitions, beta-sets, p-cores and p-quotients.
//
// A Partition is stored in canonical form: weakly decreasing positive parts,
// no trailing zeros. Zero padding only ever exists inside a BetaSet, whose
// length is chosen by the caller.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace octachar {

class Partition {
public:
    Partition() = default;

    /// Accepts trailing zeros and drops them; throws std::invalid_argument on
    /// negative or increasing parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }
    int size() const { return size_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Column lengths of the Young diagram.
    Partition conjugate() const;

    /// multiplicity[k] = number of parts equal to k, for k in [0, largest part].
    std::vector<int> multiplicities() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on the part sequence; [1,1] < [2] < [2,1].
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

class BetaSet {
public:
    BetaSet() = default;
    /// Entries must be strictly decreasing and non-negative.
    explicit BetaSet(std::vector<int> entries);

    std::span<const int> entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    std::size_t count_even() const;
    std::size_t count_odd() const { return length() - count_even(); }

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    std::vector<int> entries_;
};

enum class Sign : int { negative = -1, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator*(Sign a, Sign b) {
    return to_int(a) == to_int(b) ? Sign::positive : Sign::negative;
}
inline Sign sign_of_parity(long long exponent) {
    return (exponent % 2 == 0) ? Sign::positive : Sign::negative;
}

struct CoreQuotient {
    int p = 2;
    Partition core;
    std::vector<Partition> quotient;
};

/// {λ₁+(r−1), λ₂+(r−2), …, λ_r}; throws "insufficient beta length" if r < ℓ(λ).
BetaSet beta_set(const Partition& lambda, std::size_t length);
Partition partition_from_beta(const BetaSet& beta);

/// hooks[i][j] = arm + leg + 1 for cell (i, j).
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

bool is_p_core(const Partition& lambda, int p);

/// Slides every bead of the p-abacus as far up its runner as it goes.
Partition p_core(const Partition& lambda, int p);

/// The p-quotient read from a beta-set whose length is the smallest
/// r ≥ ℓ(λ) with r ≡ residue (mod p). residue = 0 gives the usual convention
/// of padding to a multiple of p. Changing the residue rotates the slots.
std::vector<Partition> p_quotient(const Partition& lambda, int p, int residue = 0);

CoreQuotient core_quotient(const Partition& lambda, int p, int residue = 0);

/// Inverse of (p_core, p_quotient(·, p, residue)). Throws "not a p-core" when
/// `core` has a hook divisible by p.
Partition from_core_and_quotient(const Partition& core,
                                 std::span<const Partition> quotient,
                                 int p, int residue = 0);

/// 2-quotient under the parity convention: an even-size partition is padded
/// to an even number of parts and an odd-size one to an odd number of parts.
/// This is the convention under which λ ⊢ 2n and its basechange partner
/// μ ⊢ 2n+1 carry the same quotient.
std::pair<Partition, Partition> two_quotient(const Partition& lambda);

/// True when the 2-core is empty (|λ| even) or (1) (|λ| odd).
bool has_basechange_core(const Partition& lambda);

/// Sign of the shuffle permutation that sorts the beta-numbers by parity.
/// Throws "sign undefined" unless has_basechange_core(lambda).
Sign sign_shuffle(const Partition& lambda);
/// Same, with an explicit beta-set length of the required parity.
Sign sign_shuffle(const Partition& lambda, std::size_t length);

/// (−1)^k where λ has 2k or 2k+1 odd parts.
Sign sign_odd_parts(const Partition& lambda);

// Enumeration ---------------------------------------------------------------

/// All partitions of n in increasing lexicographic order ([1^n] first).
std::vector<Partition> partitions_of(int n);
/// Number of partitions of n.
std::uint64_t partition_count(int n);
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

}  // namespace octachar

template <>
struct std::hash<octachar::Partition> {
    std::size_t operator()(const octachar::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

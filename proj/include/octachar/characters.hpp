#pragma once

// Exact character values of symmetric groups.

#include <cstddef>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "octachar/partition.hpp"

namespace octachar {

using CharValue = __int128;

/// Conjugacy class of S_m, identified by its cycle type.
class ConjClass {
public:
    ConjClass() = default;
    explicit ConjClass(Partition cycle_type) : cycle_type_(std::move(cycle_type)) {}

    const Partition& cycle_type() const { return cycle_type_; }
    int degree() const { return cycle_type_.size(); }

    friend bool operator==(const ConjClass&, const ConjClass&) = default;
    friend auto operator<=>(const ConjClass& a, const ConjClass& b) {
        return a.cycle_type_ <=> b.cycle_type_;
    }

private:
    Partition cycle_type_;
};

/// Π_k k^{i_k} i_k! for cycle type (1^{i_1} 2^{i_2} …). Degrees above 33
/// overflow 128 bits and throw std::overflow_error.
CharValue centralizer_order(const ConjClass& rho);

/// Every cycle length doubled: ρ ↦ 2ρ.
ConjClass double_class(const ConjClass& rho);

/// Sign of any permutation in the class.
Sign class_sign(const ConjClass& rho);

/// Murnaghan–Nakayama evaluator with a memo keyed on (shape, remaining
/// cycles). Thread-safe: concurrent callers share the memo under a
/// reader/writer lock.
class MnEvaluator {
public:
    CharValue operator()(const Partition& lambda, const ConjClass& rho);

    std::size_t memo_size() const;
    void clear();

private:
    CharValue evaluate(const std::vector<int>& beta, std::span<const int> cycles);

    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, CharValue> memo_;
};

/// Process-wide evaluator used by the free functions below.
MnEvaluator& shared_mn_evaluator();

/// Θ_λ(c_ρ). Throws std::invalid_argument when |λ| ≠ |ρ|.
CharValue mn_character(const Partition& lambda, const ConjClass& rho);

/// Degree of the irreducible representation λ (character at the identity).
CharValue dimension(const Partition& lambda);

/// Character of Ind_{S_a×S_b}^{S_{a+b}}(π(pi0) ⊠ π(pi1)) at c_ρ via class
/// fusion: |Z(ρ)| Σ_{ρ=ρ'⊔ρ''} Θ_{pi0}(ρ')Θ_{pi1}(ρ'') / (|Z(ρ')||Z(ρ'')|).
/// The sum is taken over exact rationals and the result is checked to be an
/// integer.
CharValue product_character(const Partition& pi0, const Partition& pi1, const ConjClass& rho);

/// Classes of S_m that are products of disjoint even cycles with at most one
/// fixed point: 2ρ for ρ ⊢ ⌊m/2⌋, with a trailing 1 when m is odd. Ordered
/// by ρ in increasing lexicographic order.
std::vector<ConjClass> admissible_classes(int m);

/// Class of w₀: [2^{⌊m/2⌋}] plus a fixed point when m is odd.
ConjClass w0_class(int m);

}  // namespace octachar

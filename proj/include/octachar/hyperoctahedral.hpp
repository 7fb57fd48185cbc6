#pragma once

// The hyperoctahedral group B_n = (Z/2)^n ⋊ S_n inside S_2n ⊂ S_2n+1:
// class embedding, the norm map, basechange, and B_n character values.

#include <string>
#include <string_view>
#include <vector>

#include "octachar/characters.hpp"
#include "octachar/partition.hpp"

namespace octachar {

/// Ordered pair (p0, p1). Indexes both B_n irreducibles π(p0, p1) and,
/// through BnClass, B_n conjugacy classes.
struct BiPartition {
    Partition p0;
    Partition p1;

    int n() const { return p0.size() + p1.size(); }

    friend bool operator==(const BiPartition&, const BiPartition&) = default;
    friend auto operator<=>(const BiPartition&, const BiPartition&) = default;
};

/// B_n conjugacy class: cycle lengths of positive and negative cycles.
struct BnClass {
    Partition positive_cycles;
    Partition negative_cycles;

    int n() const { return positive_cycles.size() + negative_cycles.size(); }

    friend bool operator==(const BnClass&, const BnClass&) = default;
    friend auto operator<=>(const BnClass&, const BnClass&) = default;
};

/// Whether the ambient symmetric group is S_2n or S_2n+1.
enum class Target { even, odd };

Target parse_target(std::string_view text);
std::string_view to_string(Target t);

/// "([2,1]|[1])"
std::string format_bipartition(const BiPartition& b);
BiPartition parse_bipartition(std::string_view text);

/// All bipartitions of n, ordered by (p0, p1).
std::vector<BiPartition> bipartitions_of(int n);
std::vector<BnClass> bn_classes_of(int n);

/// Cycle type {p0, p0, 2·p1} of the image in S_2n.
ConjClass embed_class(const BnClass& c);

/// Halves an all-even cycle type (after stripping the single fixed point when
/// the target is odd). Throws std::domain_error "norm undefined on this class".
BnClass norm(const ConjClass& w, Target target);

/// The partition of 2n (even) or 2n+1 (odd) with 2-core ∅ or (1) whose
/// 2-quotient, under the parity convention of two_quotient, is (p0, p1).
Partition basechange(const BiPartition& pi, Target target);

/// Inverse of basechange on partitions with empty or (1) 2-core.
BiPartition basechange_preimage(const Partition& lambda);

/// C(n, |p0|) · dim π(p0) · dim π(p1).
CharValue bn_dimension(const BiPartition& pi);

/// Character of π(p0, p1) at a class with no negative cycles. Such classes
/// meet S_n, where π(p0, p1) restricts to π(p0) × π(p1). Throws
/// std::domain_error "use bn_character_full" otherwise.
CharValue bn_character_positive(const BiPartition& pi, const BnClass& c);

/// Character of Ind_A^{B_n}(V) at any class by summing over all 2^n·n!
/// signed permutations. A = (Z/2)^n ⋊ (S_{|p0|} × S_{|p1|}); V is trivial on
/// the sign coordinates of the first block, the sign character on each
/// coordinate of the second block, and π(p0) ⊠ π(p1) on the permutation part.
/// Throws std::domain_error "oracle scale exceeded" for n > 6.
CharValue bn_character_bruteforce(const BiPartition& pi, const BnClass& c);

/// bn_character_positive when c has no negative cycles, otherwise the
/// brute-force sum (so limited to n ≤ 6).
CharValue bn_character_full(const BiPartition& pi, const BnClass& c);

}  // namespace octachar

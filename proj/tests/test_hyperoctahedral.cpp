#include <doctest.h>

#include <map>
#include <set>

#include "octachar/hyperoctahedral.hpp"
#include "octachar/notation.hpp"
#include "octachar/rational.hpp"
#include "oracles/oracles.hpp"

using namespace octachar;

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::uint64_t bipartition_count(int n) {
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) total += partition_count(k) * partition_count(n - k);
    return total;
}

}  // namespace

TEST_CASE("targets") {
    CHECK(parse_target("even") == Target::even);
    CHECK(parse_target("odd") == Target::odd);
    CHECK(to_string(Target::odd) == "odd");
    CHECK_THROWS(parse_target("both"));
}

TEST_CASE("enumeration") {
    for (int n = 0; n <= 10; ++n) {
        const auto bps = bipartitions_of(n);
        CHECK(bps.size() == bipartition_count(n));
        CHECK(std::is_sorted(bps.begin(), bps.end()));
        CHECK(bn_classes_of(n).size() == bipartition_count(n));
    }
    CHECK(bipartitions_of(10).size() == 481);
}

TEST_CASE("class embedding") {
    CHECK(embed_class({{1}, {}}) == ConjClass({1, 1}));
    CHECK(embed_class({{}, {1}}) == ConjClass({2}));
    CHECK(embed_class({{2, 2}, {}}) == ConjClass({2, 2, 2, 2}));
    CHECK(embed_class({{3}, {2}}) == ConjClass({4, 3, 3}));
}

TEST_CASE("embedding matches signed permutations acting on 2n points") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : oracle::all_signed_perms(n)) {
            // i ↦ 2i, −i ↦ 2i+1
            std::vector<int> perm(static_cast<std::size_t>(2 * n));
            for (int i = 0; i < n; ++i) {
                const int j = g.perm[static_cast<std::size_t>(i)];
                const bool flip = g.sign[static_cast<std::size_t>(i)] < 0;
                perm[static_cast<std::size_t>(2 * i)] = 2 * j + (flip ? 1 : 0);
                perm[static_cast<std::size_t>(2 * i + 1)] = 2 * j + (flip ? 0 : 1);
            }
            const auto [pos, neg] = oracle::signed_cycle_type(g);
            REQUIRE(embed_class({pos, neg}) == ConjClass(oracle::cycle_type(perm)));
        }
}

TEST_CASE("norm") {
    CHECK(norm(ConjClass({2}), Target::even) == BnClass{{1}, {}});
    CHECK(norm(ConjClass({8}), Target::even) == BnClass{{4}, {}});
    CHECK(norm(ConjClass({4, 2, 2, 1}), Target::odd) == BnClass{{2, 1, 1}, {}});
    CHECK_THROWS_WITH(norm(ConjClass({3, 1}), Target::even), "norm undefined on this class");
    CHECK_THROWS_WITH(norm(ConjClass({2, 1, 1}), Target::odd), "norm undefined on this class");
    CHECK_THROWS(norm(ConjClass({2, 1}), Target::even));
    for (int n = 1; n <= 8; ++n)
        for (const auto& w : admissible_classes(2 * n)) {
            CHECK(embed_class({{}, norm(w, Target::even).positive_cycles}) == w);
            CHECK(norm(w, Target::even).n() == n);
        }
}

TEST_CASE("basechange") {
    CHECK(basechange({{}, {}}, Target::even) == Partition{});
    CHECK(basechange({{}, {}}, Target::odd) == Partition{1});
    const auto q = basechange_preimage({2, 1, 1, 1, 1, 1, 1});
    CHECK(basechange(q, Target::even) == Partition{2, 1, 1, 1, 1, 1, 1});
    CHECK(basechange(q, Target::odd) == Partition{3, 2, 1, 1, 1, 1});
    const auto q2 = basechange_preimage({4, 4});
    CHECK(basechange(q2, Target::odd) == Partition{5, 3, 1});
    CHECK_THROWS(basechange_preimage({2, 1}));
    for (int n = 0; n <= 9; ++n)
        for (Target t : {Target::even, Target::odd}) {
            std::set<Partition> image;
            for (const auto& pi : bipartitions_of(n)) {
                const Partition lambda = basechange(pi, t);
                REQUIRE(lambda.size() == 2 * n + (t == Target::odd));
                REQUIRE(has_basechange_core(lambda));
                REQUIRE(basechange_preimage(lambda) == pi);
                image.insert(lambda);
            }
            CHECK(image.size() == bipartitions_of(n).size());
        }
}

TEST_CASE("w0 fibres") {
    // (2^j | 1^{n−2j}) for 0 ≤ j ≤ n/2
    for (int n = 1; n <= 10; ++n) {
        int fibre = 0;
        for (const auto& c : bn_classes_of(n))
            if (embed_class(c) == w0_class(2 * n)) ++fibre;
        CHECK(fibre == n / 2 + 1);
    }
}

TEST_CASE("dimensions") {
    CHECK(bn_dimension({{1}, {}}) == 1);
    CHECK(bn_dimension({{2, 1}, {1}}) == 8);
    for (int n = 0; n <= 8; ++n) {
        CharValue sum = 0;
        for (const auto& pi : bipartitions_of(n)) sum += bn_dimension(pi) * bn_dimension(pi);
        CHECK(sum == (CharValue{1} << n) * factorial(n));
    }
}

TEST_CASE("characters on positive classes") {
    CHECK(bn_character_positive({{1}, {}}, {{1}, {}}) == 1);
    CHECK_THROWS_WITH(bn_character_positive({{1}, {}}, {{}, {1}}), "use bn_character_full");
    CHECK_THROWS(bn_character_positive({{1}, {}}, {{1, 1}, {}}));
    for (int n = 0; n <= 7; ++n)
        for (const auto& pi : bipartitions_of(n))
            CHECK(bn_character_positive(pi, {Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), {}}) ==
                  bn_dimension(pi));
}

TEST_CASE("brute-force characters") {
    CHECK(bn_character_bruteforce({{1}, {}}, {{}, {1}}) == 1);
    CHECK(bn_character_bruteforce({{}, {1}}, {{}, {1}}) == -1);
    CHECK_THROWS_WITH(bn_character_bruteforce({{7}, {}}, {{7}, {}}), "oracle scale exceeded");
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : bipartitions_of(n))
            for (const auto& c : bn_classes_of(n)) {
                if (!c.negative_cycles.empty()) continue;
                REQUIRE(bn_character_bruteforce(pi, c) == bn_character_positive(pi, c));
                REQUIRE(bn_character_full(pi, c) == bn_character_positive(pi, c));
            }
}

TEST_CASE("brute-force characters are orthonormal over all classes") {
    for (int n = 1; n <= 3; ++n) {
        std::map<std::pair<Partition, Partition>, long long> sizes;
        for (const auto& g : oracle::all_signed_perms(n)) ++sizes[oracle::signed_cycle_type(g)];
        const long long order = (1LL << n) * factorial(n);
        const auto bps = bipartitions_of(n);
        for (const auto& a : bps)
            for (const auto& b : bps) {
                CharValue sum = 0;
                for (const auto& [cls, size] : sizes) {
                    const BnClass c{cls.first, cls.second};
                    sum += size * bn_character_full(a, c) * bn_character_full(b, c);
                }
                REQUIRE(sum == (a == b ? order : 0));
            }
    }
}

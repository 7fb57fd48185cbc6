#include <doctest.h>

#include <numeric>
#include <thread>

#include "octachar/characters.hpp"
#include "octachar/rational.hpp"
#include "oracles/oracles.hpp"

using namespace octachar;

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Ind_{S_a×S_b}^{S_m}(χ_{pi0} ⊠ χ_{pi1}) at a permutation of cycle type rho,
// by summing over all conjugates.
long long induced_by_enumeration(const Partition& pi0, const Partition& pi1, const Partition& rho) {
    const int a = pi0.size(), m = pi0.size() + pi1.size();
    std::vector<int> g;
    int start = 0;
    for (int len : rho.parts()) {
        for (int i = 0; i < len; ++i) g.push_back(start + (i + 1) % len);
        start += len;
    }
    std::vector<int> t(static_cast<std::size_t>(m)), tinv(t.size()), conj(t.size());
    std::iota(t.begin(), t.end(), 0);
    long long total = 0;
    do {
        for (int i = 0; i < m; ++i) tinv[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])] = i;
        bool inside = true;
        for (int i = 0; i < m; ++i) {
            const auto x = static_cast<std::size_t>(t[static_cast<std::size_t>(g[static_cast<std::size_t>(tinv[static_cast<std::size_t>(i)])])]);
            conj[static_cast<std::size_t>(i)] = static_cast<int>(x);
            inside = inside && ((i < a) == (static_cast<int>(x) < a));
        }
        if (!inside) continue;
        std::vector<int> first(conj.begin(), conj.begin() + a), second;
        for (int i = a; i < m; ++i) second.push_back(conj[static_cast<std::size_t>(i)] - a);
        total += oracle::frobenius_character(pi0, oracle::cycle_type(first)) *
                 oracle::frobenius_character(pi1, oracle::cycle_type(second));
    } while (std::next_permutation(t.begin(), t.end()));
    return total / (factorial(pi0.size()) * factorial(pi1.size()));
}

}  // namespace

TEST_CASE("centralizer orders") {
    CHECK(centralizer_order(ConjClass({1, 1})) == 2);
    CHECK(centralizer_order(ConjClass({2})) == 2);
    CHECK(centralizer_order(ConjClass({2, 2, 1})) == 8);
    CHECK(centralizer_order(ConjClass(Partition{})) == 1);
    CHECK_THROWS_AS(centralizer_order(ConjClass(Partition(std::vector<int>(34, 1)))), std::overflow_error);
    for (int n = 1; n <= 6; ++n)
        for (const auto& [rho, size] : oracle::class_sizes(n))
            CHECK(centralizer_order(ConjClass(rho)) * size == factorial(n));
}

TEST_CASE("class helpers") {
    CHECK(double_class(ConjClass({1})) == ConjClass({2}));
    CHECK(double_class(ConjClass({2, 1})) == ConjClass({4, 2}));
    CHECK(class_sign(ConjClass({2, 2, 1})) == Sign::positive);
    CHECK(class_sign(ConjClass({4, 1})) == Sign::negative);
    CHECK(w0_class(8) == ConjClass({2, 2, 2, 2}));
    CHECK(w0_class(9) == ConjClass({2, 2, 2, 2, 1}));
    const auto adm8 = admissible_classes(8);
    CHECK(adm8.size() == 5);
    CHECK(adm8.front() == ConjClass({2, 2, 2, 2}));
    CHECK(adm8.back() == ConjClass({8}));
    const auto adm9 = admissible_classes(9);
    CHECK(adm9.size() == 5);
    CHECK(adm9.back() == ConjClass({8, 1}));
}

TEST_CASE("character examples") {
    for (int m = 0; m <= 10; ++m)
        for (const auto& rho : partitions_of(m)) {
            CHECK(mn_character(Partition(m == 0 ? std::vector<int>{} : std::vector<int>{m}), ConjClass(rho)) == 1);
            CHECK(mn_character(Partition(std::vector<int>(static_cast<std::size_t>(m), 1)), ConjClass(rho)) ==
                  to_int(class_sign(ConjClass(rho))));
        }
    CHECK(mn_character({2, 1, 1, 1, 1, 1, 1}, ConjClass({2, 2, 2, 2})) == -1);
    CHECK(mn_character({3, 3, 2}, ConjClass({2, 2, 2, 2})) == -6);
    CHECK_THROWS_AS(mn_character({2, 1}, ConjClass({2})), std::invalid_argument);
    CHECK_THROWS(mn_character(Partition{121}, ConjClass({121})));
    CHECK(dimension({3, 2}) == 5);
    CHECK(dimension({4, 2, 1}) == 35);
}

TEST_CASE("character tables agree with the Frobenius coefficient formula") {
    for (int m = 1; m <= 7; ++m)
        for (const auto& lambda : partitions_of(m))
            for (const auto& rho : partitions_of(m))
                REQUIRE(mn_character(lambda, ConjClass(rho)) == oracle::frobenius_character(lambda, rho));
}

TEST_CASE("orthogonality") {
    for (int m = 1; m <= 8; ++m) {
        const auto ps = partitions_of(m);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                Rat rows = 0, cols = 0;
                for (const auto& rho : ps) {
                    const ConjClass c(rho);
                    Rat term(to_bigint(mn_character(a, c) * mn_character(b, c)), to_bigint(centralizer_order(c)));
                    term.canonicalize();
                    rows += term;
                    cols += Rat(to_bigint(mn_character(rho, ConjClass(a)) * mn_character(rho, ConjClass(b))));
                }
                REQUIRE(rows == (a == b ? 1 : 0));
                REQUIRE(cols == (a == b ? Rat(to_bigint(centralizer_order(ConjClass(a)))) : Rat(0)));
            }
        CharValue sum_sq = 0;
        for (const auto& l : ps) sum_sq += dimension(l) * dimension(l);
        CHECK(sum_sq == factorial(m));
    }
}

TEST_CASE("product characters") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            const Partition pa = a ? Partition{a} : Partition{}, pb = b ? Partition{b} : Partition{};
            CHECK(product_character(pa, pb, ConjClass(Partition(std::vector<int>(static_cast<std::size_t>(a + b), 1)))) ==
                  factorial(a + b) / (factorial(a) * factorial(b)));
        }
    CHECK(product_character({1}, {1}, ConjClass({2})) == 0);
    const Partition lambda{2, 1, 1, 1, 1, 1, 1};
    const auto [q0, q1] = two_quotient(lambda);
    CHECK(product_character(q0, q1, ConjClass({2, 2})) == 1);
    CHECK(to_int(sign_shuffle(lambda)) * product_character(q0, q1, ConjClass({2, 2})) ==
          mn_character(lambda, w0_class(8)));
    CHECK_THROWS(product_character({1}, {1}, ConjClass({3})));
}

TEST_CASE("product characters agree with induction by enumeration") {
    for (int m = 1; m <= 5; ++m)
        for (int a = 0; a <= m; ++a)
            for (const auto& p0 : partitions_of(a))
                for (const auto& p1 : partitions_of(m - a))
                    for (const auto& rho : partitions_of(m))
                        REQUIRE(product_character(p0, p1, ConjClass(rho)) == induced_by_enumeration(p0, p1, rho));
}

TEST_CASE("memoized evaluation is consistent across threads") {
    MnEvaluator shared;
    const int m = 16;
    const auto ps = partitions_of(m);
    MnEvaluator serial;
    std::vector<CharValue> expected;
    for (const auto& l : ps) expected.push_back(serial(l, w0_class(m)));
    for (const auto& l : ps) expected.push_back(serial(l, ConjClass({4, 4, 4, 2, 2})));
    CHECK(serial.memo_size() > 0);

    std::vector<std::vector<CharValue>> got(8);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < got.size(); ++t)
        pool.emplace_back([&, t] {
            for (const auto& l : ps) got[t].push_back(shared(l, w0_class(m)));
            for (const auto& l : ps) got[t].push_back(shared(l, ConjClass({4, 4, 4, 2, 2})));
        });
    for (auto& th : pool) th.join();
    for (const auto& g : got) CHECK(g == expected);
    serial.clear();
    CHECK(serial.memo_size() == 0);
}

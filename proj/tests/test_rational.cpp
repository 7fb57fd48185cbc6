#include <doctest.h>

#include <random>

#include "octachar/rational.hpp"
#include "oracles/oracles.hpp"

using namespace octachar;

TEST_CASE("rational text") {
    CHECK(format_rational(Rat(11)) == "11/1");
    CHECK(format_rational(Rat(-3, 4)) == "-3/4");
    CHECK(parse_rational("6/8") == Rat(3, 4));
    CHECK(parse_rational("-3/4") == Rat(-3, 4));
    CHECK(parse_rational("5") == Rat(5));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1/-2"));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational(""));
    for (int p = -7; p <= 7; ++p)
        for (int q = 1; q <= 5; ++q) {
            Rat r(p, q);
            r.canonicalize();
            CHECK(parse_rational(format_rational(r)) == r);
        }
}

TEST_CASE("int128 conversion") {
    const __int128 v = static_cast<__int128>(1) << 100;
    CHECK(to_int128(to_bigint(v)) == v);
    CHECK(to_int128(to_bigint(-v)) == -v);
    CHECK_THROWS_AS(to_int128(BigInt(1) << 130), std::overflow_error);
}

TEST_CASE("powers") {
    CHECK(pow(Rat(-2, 3), 3) == Rat(-8, 27));
    CHECK(pow(Rat(5), 0) == Rat(1));
}

TEST_CASE("determinants") {
    RatMatrix empty(0, 0);
    CHECK(determinant(empty) == 1);
    RatMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK(determinant(singular) == 0);
    RatMatrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(determinant(swap) == -1);
    CHECK_THROWS(determinant(RatMatrix(2, 3)));
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), zero(0, 3);
    for (std::size_t d = 1; d <= 5; ++d)
        for (int trial = 0; trial < 40; ++trial) {
            RatMatrix m(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    m(i, j) = zero(rng) == 0 ? Rat(0) : Rat(num(rng), den(rng));
                    m(i, j).canonicalize();
                }
            REQUIRE(determinant(m) == oracle::cofactor_determinant(m));
        }
}

#include <doctest.h>

#include <limits>

#include "octachar/hyperoctahedral.hpp"
#include "octachar/notation.hpp"

using namespace octachar;

TEST_CASE("partition text") {
    CHECK(parse_partition("[3,2,1^4]") == Partition{3, 2, 1, 1, 1, 1});
    CHECK(parse_partition("[3,2,1,1,1,1]") == Partition{3, 2, 1, 1, 1, 1});
    CHECK(parse_partition("[]") == Partition{});
    CHECK(parse_partition("[1^9]") == Partition(std::vector<int>(9, 1)));
    CHECK(parse_partition(" [ 2^2 , 1 ] ") == Partition{2, 2, 1});
    CHECK(format_partition({3, 2, 1, 1, 1, 1}) == "[3,2,1^4]");
    CHECK(format_partition({}) == "[]");
    CHECK(format_partition({2, 2, 2, 2}) == "[2^4]");
}

TEST_CASE("malformed partitions report a position") {
    const auto position_of = [](const char* text) -> std::size_t {
        try {
            parse_partition(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("no parse error for " << text);
        return 0;
    };
    CHECK(position_of("[1,2]") == 3);
    CHECK(position_of("[0]") == 1);
    CHECK(position_of("[2,-1]") == 3);
    CHECK(position_of("[2^0]") == 3);
    CHECK(position_of("3,2]") == 0);
    CHECK(position_of("[3,2") == 4);
    CHECK(position_of("[3,,2]") == 3);
    CHECK(position_of("[3]x") == 3);
    CHECK(position_of("[a]") == 1);
    CHECK_THROWS_AS(parse_partition("[2^]"), ParseError);
}

TEST_CASE("partition text round trip") {
    for (int n = 0; n <= 14; ++n)
        for (const auto& p : partitions_of(n)) REQUIRE(parse_partition(format_partition(p)) == p);
}

TEST_CASE("bipartition text") {
    const BiPartition b{{2, 1}, {1}};
    CHECK(format_bipartition(b) == "([2,1]|[1])");
    CHECK(parse_bipartition("([2,1]|[1])") == b);
    CHECK(parse_bipartition("([]|[1^2])") == BiPartition{{}, {1, 1}});
    CHECK_THROWS(parse_bipartition("([2,1],[1])"));
    CHECK_THROWS(parse_bipartition("([2,1]|[1]"));
    for (int n = 0; n <= 8; ++n)
        for (const auto& pi : bipartitions_of(n)) REQUIRE(parse_bipartition(format_bipartition(pi)) == pi);
}

TEST_CASE("128-bit integers") {
    const __int128 big = static_cast<__int128>(std::numeric_limits<long long>::max()) * 1000 + 7;
    for (__int128 v : {__int128(0), __int128(-1), __int128(42), big, -big,
                       std::numeric_limits<__int128>::max(), std::numeric_limits<__int128>::min()})
        CHECK(parse_int128(format_int128(v)) == v);
    CHECK(format_int128(-4) == "-4");
    CHECK_THROWS(parse_int128(""));
    CHECK_THROWS(parse_int128("12a"));
    CHECK_THROWS(parse_int128("170141183460469231731687303715884105728"));
}

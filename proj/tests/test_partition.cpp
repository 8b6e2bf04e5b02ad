#include "doctest.h"
#include "scrollar/partition.hpp"
#include "support/oracles.hpp"

using namespace scrollar;

TEST_CASE("partition validation and parsing") {
    CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
    CHECK_THROWS_AS(Partition({0}), ValidationError);
    CHECK_THROWS_AS(Partition::parse("3,,1"), ValidationError);
    CHECK_THROWS_AS(Partition::parse("a,b"), ValidationError);
    CHECK(Partition::parse("3,2,1").parts() == std::vector<int>{3, 2, 1});
    CHECK(Partition::parse(" 3 , 2 ").sum() == 5);
    CHECK(Partition({4, 2, 1}).to_string() == "4,2,1");
}

TEST_CASE("enumeration matches the recursive oracle") {
    CHECK(enumerate_partitions(1).size() == 1);
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(6).size() == 11);
    CHECK_THROWS_AS(enumerate_partitions(0), ValidationError);
    for (int d = 1; d <= 9; ++d) {
        auto got = enumerate_partitions(d);
        auto expect = oracle::all_partitions(d);
        std::sort(expect.begin(), expect.end(), [](auto& a, auto& b) { return a > b; });
        REQUIRE(got.size() == expect.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].parts() == expect[i]);
        // canonical order: descending lexicographic, (d) first, (1^d) last
        CHECK(got.front().parts() == std::vector<int>{d});
        CHECK(got.back().parts() == std::vector<int>(static_cast<size_t>(d), 1));
    }
}

TEST_CASE("conjugation") {
    CHECK(Partition({4}).conjugate().parts() == std::vector<int>{1, 1, 1, 1});
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    for (const auto& p : enumerate_partitions(8)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("dimension via hooks equals the filling count") {
    CHECK(dimension(Partition({5})) == 1);
    CHECK(dimension(Partition({2, 2, 1})) == 5);
    CHECK(dimension(Partition({2, 2})) == 2);
    for (int d = 1; d <= 7; ++d)
        for (const auto& p : enumerate_partitions(d))
            CHECK(dimension(p) == oracle::count_standard_fillings(p.parts()));
}

TEST_CASE("sum of squared dimensions is d!") {
    for (int d = 1; d <= 9; ++d) {
        Int total = 0;
        for (const auto& p : enumerate_partitions(d)) total += dimension(p) * dimension(p);
        CHECK(total == factorial(d));
    }
}

TEST_CASE("class sizes sum to the group order") {
    for (int d = 1; d <= 8; ++d) {
        Int total = 0;
        for (const auto& e : enumerate_partitions(d)) total += class_size(e);
        CHECK(total == factorial(d));
    }
}

TEST_CASE("cycle powers") {
    CHECK(cycle_power_type(Partition({4}), 2) == Partition({2, 2}));
    CHECK(cycle_power_type(Partition({6}), 3) == Partition({2, 2, 2}));
    CHECK(cycle_power_type(Partition({3, 2}), 2) == Partition({3, 1, 1}));
    CHECK(cycle_power_type(Partition({3, 2}), 0) == Partition({1, 1, 1, 1, 1}));
    CHECK(cycle_power_type(Partition({5}), 5) == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("border strips") {
    // (5,3,2,1)/(2,1) is a border strip of height 3
    CHECK(is_border_strip(Partition({5, 3, 2, 1}), Partition({2, 1})));
    CHECK(skew_height(Partition({5, 3, 2, 1}), Partition({2, 1})) == 3);
    // a 2x2 block is not
    CHECK_FALSE(is_border_strip(Partition({2, 2}), Partition()));
    // diagonal contact only: disconnected under 4-adjacency
    CHECK_FALSE(is_border_strip(Partition({3, 1}), Partition({1})));
    // hooks are border strips
    CHECK(is_border_strip(Partition({3, 1}), Partition()));
    CHECK(is_border_strip(Partition({3, 1}), Partition({1, 1})));
}

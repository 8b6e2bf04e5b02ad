#include "doctest.h"
#include "scrollar/characters.hpp"
#include "scrollar/tableau.hpp"

using namespace scrollar;

TEST_CASE("standard tableau validation") {
    CHECK_THROWS_AS(StandardTableau(Partition({2, 1}), {{1, 3}, {2, 4}}), ValidationError);
    CHECK_THROWS_AS(StandardTableau(Partition({2, 1}), {{2, 1}, {3}}), ValidationError);
    CHECK_THROWS_AS(StandardTableau(Partition({2, 1}), {{1, 2}, {1}}), ValidationError);
    CHECK_NOTHROW(StandardTableau(Partition({2, 1}), {{1, 2}, {3}}));
}

TEST_CASE("tableau enumeration counts match dimensions") {
    CHECK(standard_tableaux(Partition({4})).size() == 1);
    CHECK(standard_tableaux(Partition({1, 1, 1})).size() == 1);
    CHECK(standard_tableaux(Partition({2, 1})).size() == 2);
    for (int d = 1; d <= 7; ++d)
        for (const auto& p : enumerate_partitions(d))
            CHECK(Int(static_cast<long>(standard_tableaux(p).size())) == dimension(p));
}

TEST_CASE("charge data of the worked example") {
    StandardTableau t(Partition({4, 2, 1}), {{1, 3, 5, 7}, {2, 4}, {6}});
    ChargeData cd = charge_data(t);
    CHECK(cd.reading_word == std::vector<int>{6, 2, 4, 1, 3, 5, 7});
    CHECK(cd.charge == 12);
    CHECK(cd.max_subscript == 3);
    CHECK(cd.subscript(1) == 0);
    CHECK(cd.subscript(2) == 1);
    CHECK(cd.subscript(4) == 2);
    CHECK(cd.subscript(6) == 3);
}

TEST_CASE("charge of row and column tableaux") {
    for (int d = 2; d <= 8; ++d) {
        ChargeData row = charge_data(row_tableau(d));
        CHECK(row.charge == 0);
        CHECK(row.max_subscript == 0);
        ChargeData col = charge_data(column_tableau(d));
        CHECK(col.charge == static_cast<long>(d) * (d - 1) / 2);
        CHECK(col.max_subscript == d - 1);
    }
}

TEST_CASE("subscript word is a staircase") {
    for (const auto& p : enumerate_partitions(6))
        for (const auto& t : standard_tableaux(p)) {
            ChargeData cd = charge_data(t);
            CHECK(cd.subscript(1) == 0);
            for (int i = 1; i < 6; ++i) {
                int step = cd.subscript(i + 1) - cd.subscript(i);
                CHECK(step >= 0);
                CHECK(step <= 1);
            }
            long total = 0;
            int maxs = 0;
            for (int s : cd.subscripts) {
                total += s;
                maxs = std::max(maxs, s);
            }
            CHECK(total == cd.charge);
            CHECK(maxs == cd.max_subscript);
        }
}

TEST_CASE("charge statistics tie to the p-invariant") {
    // position-wise ascent counts and the total of max subscripts
    for (int d = 2; d <= 6; ++d) {
        for (const auto& lambda : enumerate_partitions(d)) {
            Int p = p_invariant(lambda);
            auto tabs = standard_tableaux(lambda);
            for (int i = 1; i <= d - 1; ++i) {
                long ascents = 0;
                for (const auto& t : tabs) {
                    ChargeData cd = charge_data(t);
                    if (cd.subscript(i + 1) == cd.subscript(i) + 1) ++ascents;
                }
                CHECK(Int(ascents) == p);
            }
            long max_total = 0;
            for (const auto& t : tabs) max_total += charge_data(t).max_subscript;
            CHECK(Int(max_total) == p * (d - 1));
        }
    }
}

#include "doctest.h"
#include <set>

#include "scrollar/group.hpp"

using namespace scrollar;

TEST_CASE("permutation basics") {
    Perm p = Perm::parse(6, "(1 2 3 4)(5 6)");
    CHECK(p.cycle_type() == Partition({4, 2}));
    CHECK(p.to_cycle_string() == "(1 2 3 4)(5 6)");
    CHECK((p * p.inverse()).is_identity());
    CHECK(Perm::parse(4, "()").is_identity());
    CHECK_THROWS_AS(Perm::parse(4, "(1 5)"), ValidationError);
    CHECK_THROWS_AS(Perm::parse(4, "((1 2)"), ValidationError);
    CHECK_THROWS_AS(Perm::parse(4, "(1 x)"), ValidationError);
    CHECK(Perm::parse(4, "(1,2)(3,4)").cycle_type() == Partition({2, 2}));

    Perm a = Perm::parse(3, "(1 2)");
    Perm b = Perm::parse(3, "(2 3)");
    // composition acts right-to-left: (a*b)(x) = a(b(x))
    CHECK((a * b).to_cycle_string() == "(1 2 3)");

    Perm rep = representative_of_type(Partition({3, 2}));
    CHECK(rep.cycle_type() == Partition({3, 2}));
}

TEST_CASE("lehmer ranks roundtrip") {
    for (long r = 0; r < 24; ++r) CHECK(lehmer_rank(perm_from_lehmer_rank(4, r)) == r);
}

TEST_CASE("adjacent words multiply back") {
    for (long r = 0; r < 120; ++r) {
        Perm p = perm_from_lehmer_rank(5, r);
        Perm acc(5);
        for (int k : adjacent_word(p)) acc = acc * Perm::from_cycles(5, {{k + 1, k + 2}});
        CHECK(acc == p);
    }
}

TEST_CASE("closure orders for the named subgroups") {
    CHECK(subgroup_by_name(4, "D4").order() == 8);
    CHECK(subgroup_by_name(5, "AGL1F5").order() == 20);
    CHECK(subgroup_by_name(6, "S5prime").order() == 120);
    CHECK(subgroup_by_name(6, "F36").order() == 36);
    CHECK(subgroup_by_name(6, "F72").order() == 72);
    CHECK(PermSubgroup::symmetric(5).order() == 120);
    CHECK(PermSubgroup::alternating(5).order() == 60);
    CHECK(PermSubgroup::young(Partition({3, 2})).order() == 12);
    CHECK(subgroup_by_name(6, "S5prime").is_transitive());
    CHECK_FALSE(PermSubgroup::young(Partition({3, 2})).is_transitive());
    CHECK_THROWS_AS(subgroup_by_name(6, "nosuch"), ValidationError);
    CHECK(subgroup_by_name(5, "Young:3,2").order() == 12);
    CHECK(subgroup_by_name(5, "trivial").order() == 1);
    CHECK(subgroup_by_name(5, "Sd-1").order() == 24);
    CHECK_THROWS_AS(subgroup_by_name(5, "Young:3,3"), ValidationError);
}

TEST_CASE("degree-6 transitive catalog has the expected class orders") {
    auto reg = transitive_registry(6);
    std::multiset<long> orders;
    for (const auto& [name, g] : reg) {
        CHECK(g.is_transitive());
        orders.insert(g.order());
    }
    std::multiset<long> expected{6, 6, 12, 12, 18, 24, 24, 24, 36, 36, 48, 60, 72, 120, 360, 720};
    CHECK(orders == expected);
}

TEST_CASE("coset actions and permutation characters") {
    // S_{d-1} cosets are the d points
    for (int d = 3; d <= 8; ++d) {
        PermSubgroup h = PermSubgroup::young(Partition({d - 1, 1}));
        CosetAction cosets(h);
        CHECK(cosets.index() == d);
        VirtualCharacter ind = cosets.permutation_character();
        for (const auto& e : CharacterTable::of(d).classes())
            CHECK(ind.at(e) == e.fixed_points());
    }

    // D4 in S4: index 3, the (2,2) class fixes all three cosets
    CosetAction d4(subgroup_by_name(4, "D4"));
    CHECK(d4.index() == 3);
    CHECK(d4.fixed_cosets(Perm::parse(4, "(1 2)(3 4)")) == 3);
    CHECK(d4.fixed_cosets(Perm::parse(4, "(1 2 3 4)")) == 1);

    // transitivity: mult of the trivial character is 1 for every registry entry
    for (const auto& [name, g] : transitive_registry(4)) {
        (void)name;
        CHECK(mult(permutation_character(g), VirtualCharacter::trivial(4)) == 1);
    }
}

TEST_CASE("standard-rep multiplicity counts orbits minus one") {
    for (int d = 4; d <= 6; ++d) {
        std::vector<PermSubgroup> subs{PermSubgroup::young(Partition({d - 1, 1})),
                                       PermSubgroup::trivial(d), PermSubgroup::symmetric(d)};
        if (d == 4) subs.push_back(subgroup_by_name(4, "D4"));
        if (d == 5) subs.push_back(subgroup_by_name(5, "AGL1F5"));
        if (d == 6) subs.push_back(subgroup_by_name(6, "F36"));
        for (const auto& h : subs) {
            // orbit count on points
            std::vector<int> owner(static_cast<size_t>(d), -1);
            int orbits = 0;
            for (int x = 0; x < d; ++x) {
                if (owner[static_cast<size_t>(x)] >= 0) continue;
                ++orbits;
                std::vector<int> stack{x};
                owner[static_cast<size_t>(x)] = x;
                while (!stack.empty()) {
                    int y = stack.back();
                    stack.pop_back();
                    for (const auto& g : h.generators()) {
                        int z = g.apply(y);
                        if (owner[static_cast<size_t>(z)] < 0) {
                            owner[static_cast<size_t>(z)] = x;
                            stack.push_back(z);
                        }
                    }
                }
            }
            CHECK(mult(VirtualCharacter::irreducible(hook_partition(d, 1)),
                       permutation_character(h)) == orbits - 1);
        }
    }
}

TEST_CASE("p-invariant of subgroups: both formulas agree and match known values") {
    CHECK(p_invariant(subgroup_by_name(4, "D4")) == 1);
    CHECK(p_invariant(subgroup_by_name(5, "AGL1F5")) == 3);
    CHECK(p_invariant(subgroup_by_name(6, "S5prime")) == 3);
    for (int d = 4; d <= 6; ++d) CHECK(p_invariant(PermSubgroup::young(Partition({d - 1, 1}))) == 1);
    // Young subgroup p equals the partition p-invariant of (d-1,1)
    CHECK(p_invariant(PermSubgroup::young(Partition({3, 1}))) == p_invariant(Partition({3, 1})));
    // both internal formulas agree on every Young subgroup up to degree 6
    for (int d = 2; d <= 6; ++d)
        for (const auto& lambda : enumerate_partitions(d)) CHECK(p_invariant(PermSubgroup::young(lambda)) >= 0);
}

TEST_CASE("coset character decomposition for the classical resolvents") {
    // Ind_{D4}^{S4} 1 = trivial + V_{(2,2)}
    auto m4 = decompose(permutation_character(subgroup_by_name(4, "D4")));
    const auto& c4 = CharacterTable::of(4).classes();
    for (size_t i = 0; i < m4.size(); ++i) {
        Int expect = (c4[i] == Partition({4}) || c4[i] == Partition({2, 2})) ? 1 : 0;
        CHECK(m4[i] == expect);
    }
    // Ind_{AGL}^{S5} 1 = trivial + V_{(2,2,1)}
    auto m5 = decompose(permutation_character(subgroup_by_name(5, "AGL1F5")));
    const auto& c5 = CharacterTable::of(5).classes();
    for (size_t i = 0; i < m5.size(); ++i) {
        Int expect = (c5[i] == Partition({5}) || c5[i] == Partition({2, 2, 1})) ? 1 : 0;
        CHECK(m5[i] == expect);
    }
    // Ind_{S5'}^{S6} 1 = trivial + V_{(2,2,2)}
    auto m6 = decompose(permutation_character(subgroup_by_name(6, "S5prime")));
    const auto& c6 = CharacterTable::of(6).classes();
    for (size_t i = 0; i < m6.size(); ++i) {
        Int expect = (c6[i] == Partition({6}) || c6[i] == Partition({2, 2, 2})) ? 1 : 0;
        CHECK(m6[i] == expect);
    }
}

TEST_CASE("registry coset characters decompose with nonnegative multiplicities") {
    for (int d = 4; d <= 6; ++d)
        for (const auto& [name, h] : transitive_registry(d)) {
            (void)name;
            VirtualCharacter ind = permutation_character(h);
            auto mults = decompose(ind);
            const auto& classes = CharacterTable::of(d).classes();
            Int total = 0;
            for (size_t i = 0; i < mults.size(); ++i) {
                CHECK(mults[i] >= 0);
                total += mults[i] * dimension(classes[i]);
            }
            CHECK(total == ind.dim());
        }
}

TEST_CASE("products and double cosets") {
    PermSubgroup a4 = PermSubgroup::alternating(4);
    PermSubgroup d4 = subgroup_by_name(4, "D4");
    CHECK(product_size(a4, d4) == 24);
    CHECK(product_is_full(a4, d4));
    PermSubgroup c4 = subgroup_by_name(4, "C4");
    CHECK(product_size(c4, d4) == 8);
    CHECK_FALSE(product_is_full(c4, d4));

    // component degrees sum to [S_d : H]
    for (const auto& [name, g] : transitive_registry(4)) {
        (void)name;
        DoubleCosets dc = double_cosets(d4, g);
        long total = 0;
        for (long deg : dc.component_degrees) total += deg;
        CHECK(total == 3);
    }
}

TEST_CASE("irreducibility catalogs reproduce the classical statements") {
    // degree 4: the D4 resolvent is irreducible iff G is S4 or A4
    PermSubgroup d4 = subgroup_by_name(4, "D4");
    for (const auto& [name, g] : transitive_registry(4)) {
        bool expect = (name == "Sd" || name == "Ad");
        CHECK(product_is_full(g, d4) == expect);
    }
    // degree 5: AGL resolvent irreducible iff G is S5 or A5
    PermSubgroup agl = subgroup_by_name(5, "AGL1F5");
    for (const auto& [name, g] : transitive_registry(5)) {
        bool expect = (name == "Sd" || name == "Ad");
        CHECK(product_is_full(g, agl) == expect);
    }
    // degree 6: exotic resolvent irreducible iff G in {S6, A6, F36, F72}
    PermSubgroup s5p = subgroup_by_name(6, "S5prime");
    for (const auto& [name, g] : transitive_registry(6)) {
        bool expect = (name == "Sd" || name == "Ad" || name == "F36" || name == "F72");
        CHECK(product_is_full(g, s5p) == expect);
    }
}

TEST_CASE("orbit patterns on cosets") {
    CosetAction d4(subgroup_by_name(4, "D4"));
    CHECK(d4.orbit_pattern(Perm::parse(4, "(1 2 3 4)")) == Partition({2, 1}));
    CHECK(d4.orbit_pattern(Perm::parse(4, "(1 2)(3 4)")) == Partition({1, 1, 1}));
    CosetAction agl(subgroup_by_name(5, "AGL1F5"));
    CHECK(agl.orbit_pattern(Perm::parse(5, "(1 2)")) == Partition({2, 2, 2}));
}

TEST_CASE("closure degree cap") {
    CHECK_THROWS_AS(PermSubgroup::close(10, {Perm(10)}), ResourceError);
}

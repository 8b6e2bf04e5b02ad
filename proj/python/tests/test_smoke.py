"""Smoke tests for the pyscrollar module. Usage: test_smoke.py <module-dir>."""

import sys

if len(sys.argv) > 1:
    sys.path.insert(0, sys.argv[1])

import pyscrollar as ps  # noqa: E402


def check(cond, message):
    if not cond:
        raise SystemExit(f"FAIL: {message}")


def main():
    check(ps.partitions(4) == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"], "partitions of 4")
    check(ps.conjugate("3,1") == "2,1,1", "conjugate")
    check(ps.dimension("2,2,1") == 5, "dimension")
    check(ps.character("2,2,2", "2,1,1,1,1") == -1, "character value")
    check(ps.p_invariant("2,2,1") == 3, "p invariant")
    check(len(ps.standard_tableaux("2,1")) == 2, "tableau count")

    word, subs, charge, max_sub = ps.charge([[1, 3, 5, 7], [2, 4], [6]])
    check(word == [6, 2, 4, 1, 3, 5, 7], "reading word")
    check(charge == 12 and max_sub == 3, "charge statistics")
    check(subs[0] == 0, "first subscript")

    check(ps.subgroup_order(4, "D4") == 8, "D4 order")
    check(ps.subgroup_p_invariant(5, "AGL1F5") == 3, "p(AGL)")
    decomp = dict(ps.coset_character_decomposition(6, "S5prime"))
    check(decomp == {"6": 1, "2,2,2": 1}, "exotic coset character")
    check(ps.product_is_full(4, "Ad", "D4"), "A4 x D4 product")
    check(not ps.product_is_full(4, "C4", "D4"), "C4 x D4 product")

    check(ps.hook_scrollars(4, 2, [1, 2, 2], 2) == [3, 3, 4], "hook multiset")
    check(ps.volume(6, 5, [1, 2, 2, 2, 3], "2,2,2") == 30, "volume 3g+15")
    summary = ps.resolvent_summary(5, 3, [1, 2, 2, 2], "AGL1F5")
    check(summary["arithmetic_genus"] == 16, "Cayley genus 3g+7")
    check(summary["index"] == 6, "Cayley index")
    lower, upper = ps.splitting_type_bounds(1, 4, 3)
    check(upper == "4", "degree-4 splitting bound")
    check(ps.betti_number(2, 5) == 5, "betti number")
    check(ps.splitting_partition(1, 4) == "2,2", "splitting partition")

    rows = {r["e"]: r for r in ps.addendum_table(4, "D4")}
    check(rows["4"]["maximal_exponent"] == 1, "D4 table maximal disc")
    check(rows["2,2"]["pattern"] == "1,1,1", "D4 table pattern")
    check(ps.is_lambda_maximal("3,3", "3,1,1,1"), "two-row maximality")
    check(not ps.is_lambda_maximal("2,2,2", "3,1,1,1"), "non-maximal case")

    discs = ps.local_disc_exponents(3)
    check(discs["2,1"] == 4 and discs["full"] == 6, "local model discs")

    try:
        ps.volume(4, 2, [1, 2, 3], "2,2")
        raise SystemExit("FAIL: bad profile accepted")
    except ValueError:
        pass

    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()

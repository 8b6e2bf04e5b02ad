#include "doctest.h"
#include "scrollar/specht.hpp"

using namespace scrollar;

namespace {

bool is_identity(const RatMatrix& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != Rat(i == j ? 1 : 0)) return false;
    return true;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    size_t n = a.size();
    RatMatrix out(n, RatVector(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    for (auto& row : out)
        for (auto& x : row) x.canonicalize();
    return out;
}

}  // namespace

TEST_CASE("one dimensional representations") {
    Rep triv = specht_rep(Partition({5}));
    CHECK(triv.dim == 1);
    for (const auto& g : triv.gens) CHECK(g[0][0] == 1);
    Rep sign = specht_rep(Partition({1, 1, 1, 1, 1}));
    CHECK(sign.dim == 1);
    for (const auto& g : sign.gens) CHECK(g[0][0] == -1);
}

TEST_CASE("generators are involutions and satisfy the braid relations") {
    for (int d = 3; d <= 6; ++d) {
        for (const auto& lambda : enumerate_partitions(d)) {
            Rep rep = specht_rep(lambda);
            CHECK(rep.dim == dimension(lambda));
            for (size_t i = 0; i < rep.gens.size(); ++i) {
                CHECK(is_identity(mul(rep.gens[i], rep.gens[i])));
                for (size_t j = i + 1; j < rep.gens.size(); ++j) {
                    RatMatrix ab = mul(rep.gens[i], rep.gens[j]);
                    RatMatrix ba = mul(rep.gens[j], rep.gens[i]);
                    if (j == i + 1) {
                        CHECK(mul(ab, rep.gens[i]) == mul(ba, rep.gens[j]));
                    } else {
                        CHECK(ab == ba);
                    }
                }
            }
        }
    }
}

TEST_CASE("matrix traces equal characters") {
    for (int d = 2; d <= 6; ++d)
        for (const auto& lambda : enumerate_partitions(d)) {
            Rep rep = specht_rep(lambda);
            for (const auto& e : enumerate_partitions(d))
                CHECK(rep_trace(rep, representative_of_type(e)) == Rat(character(lambda, e)));
        }
}

TEST_CASE("specific traces for the square shape") {
    Rep rep = specht_rep(Partition({2, 2}));
    CHECK(rep_trace(rep, Perm(4)) == 2);
    CHECK(rep_trace(rep, Perm::parse(4, "(1 2)")) == 0);
    CHECK(rep_trace(rep, Perm::parse(4, "(1 2 3 4)")) == 0);
}

TEST_CASE("degree bound") {
    CHECK_THROWS_AS(specht_rep(Partition({5, 4})), ResourceError);
    CHECK_NOTHROW(specht_rep(Partition({5, 4}), 9));
}

TEST_CASE("tensor and sym2 constructions") {
    Rep std4 = specht_rep(Partition({3, 1}));
    Rep t = tensor_rep(std4, std4);
    CHECK(t.dim == 9);
    Rep s = sym2_rep(std4);
    CHECK(s.dim == 6);
    for (const auto& e : enumerate_partitions(4)) {
        Perm rho = representative_of_type(e);
        Rat chi1 = rep_trace(std4, rho);
        Rat chi2 = Rat(character(Partition({3, 1}), cycle_power_type(e, 2)));
        CHECK(rep_trace(s, rho) == (chi1 * chi1 + chi2) / 2);
        CHECK(rep_trace(t, rho) == chi1 * chi1);
    }
}

TEST_CASE("fixed vectors in tensor models") {
    auto p1 = resolution_pivot_vector(4, 1);
    REQUIRE(p1.has_value());
    CHECK(p1->size() == 6);

    auto plast = resolution_pivot_vector(4, 2);
    REQUIRE(plast.has_value());
    CHECK(plast->size() == 2 * 6);

    for (int d = 5; d <= 6; ++d)
        for (int i = 1; i <= d - 2; ++i) {
            auto v = resolution_pivot_vector(d, i);
            REQUIRE_MESSAGE(v.has_value(), "d=" << d << " i=" << i);
        }
}

TEST_CASE("fixed vectors are genuinely fixed") {
    int d = 5, i = 2;
    Rep amb = tensor_rep(specht_rep(lambda_chain(d, i)), specht_rep(hook_partition(d, 1)));
    PermSubgroup h = PermSubgroup::young(lambda_chain(d, i + 1));
    auto v = fixed_isotypic_vector(amb, h, lambda_chain(d, i + 1));
    REQUIRE(v.has_value());
    for (const auto& g : h.generators()) {
        RatVector moved(v->size(), Rat(0));
        RatMatrix m = rep_matrix(amb, g);
        for (size_t r = 0; r < m.size(); ++r)
            for (size_t c = 0; c < m.size(); ++c) moved[r] += m[r][c] * (*v)[c];
        for (size_t r = 0; r < moved.size(); ++r) {
            moved[r].canonicalize();
            CHECK(moved[r] == (*v)[r]);
        }
    }
}

TEST_CASE("fixed space dimension one for the chain partitions") {
    for (int d = 4; d <= 6; ++d)
        for (int i = 2; i <= d - 2; ++i) {
            VirtualCharacter ind = permutation_character(PermSubgroup::young(lambda_chain(d, i)));
            CHECK(mult(VirtualCharacter::irreducible(lambda_chain(d, i)), ind) == 1);
        }
}

TEST_CASE("ambiguous multiplicity is rejected") {
    // std x std x std at d = 3 contains the standard representation three
    // times; with the trivial stabilizer the candidate space is a plane or
    // bigger, which the interface refuses to collapse
    Rep std3 = specht_rep(Partition({2, 1}));
    Rep cube = tensor_rep(std3, tensor_rep(std3, std3));
    CHECK_THROWS_AS(fixed_isotypic_vector(cube, PermSubgroup::trivial(3), Partition({2, 1})),
                    ValidationError);
}

TEST_CASE("absent when the multiplicity is zero") {
    Rep amb = tensor_rep(specht_rep(Partition({2, 2})), specht_rep(Partition({3, 1})));
    auto v = fixed_isotypic_vector(amb, PermSubgroup::young(Partition({4})), Partition({4}));
    CHECK_FALSE(v.has_value());
}

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scrollar/characters.hpp"
#include "scrollar/perm.hpp"

namespace scrollar {

/// A subgroup of S_d with its full element set, computed by breadth-first
/// closure from the generators. Immutable once built. The closure degree is
/// hard-capped at d <= 9.
class PermSubgroup {
public:
    static PermSubgroup close(int d, std::vector<Perm> generators);
    static PermSubgroup symmetric(int d);
    static PermSubgroup alternating(int d);
    static PermSubgroup trivial(int d);
    /// Young subgroup S_lambda on consecutive blocks.
    static PermSubgroup young(const Partition& lambda);

    int degree() const { return d_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<Perm>& elements() const { return elements_; }  // sorted
    const std::vector<Perm>& generators() const { return gens_; }
    bool contains(const Perm& p) const;
    bool is_transitive() const;
    long transposition_count() const;

    bool operator==(const PermSubgroup& o) const {
        return d_ == o.d_ && elements_ == o.elements_;
    }

private:
    PermSubgroup(int d, std::vector<Perm> gens, std::vector<Perm> elements);
    int d_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
};

/// Left cosets sH of H in S_d with the S_d-action by left multiplication.
/// Cosets are keyed by their lexicographically minimal member.
class CosetAction {
public:
    explicit CosetAction(PermSubgroup h);

    long index() const { return static_cast<long>(reps_.size()); }
    const PermSubgroup& subgroup() const { return h_; }
    const std::vector<Perm>& representatives() const { return reps_; }

    int act(const Perm& s, int coset) const;
    long fixed_cosets(const Perm& s) const;

    /// Value at class e = number of cosets fixed by a representative of e.
    VirtualCharacter permutation_character() const;

    /// Orbit sizes of <rho> on the cosets, as a partition of the index.
    Partition orbit_pattern(const Perm& rho) const;

private:
    int coset_of(const Perm& s) const;
    PermSubgroup h_;
    std::vector<Perm> reps_;
    std::map<std::vector<int>, int> index_;  // minimal coset member -> index
};

VirtualCharacter permutation_character(const PermSubgroup& h);

/// p(H) = (index - chi_Ind(transposition)) / 2, cross-checked against
/// (d-2)! #{transpositions outside H} / |H|. Disagreement raises
/// ConsistencyError.
Int p_invariant(const PermSubgroup& h);

Int product_size(const PermSubgroup& g, const PermSubgroup& h);  // |GH|
bool product_is_full(const PermSubgroup& g, const PermSubgroup& h);

/// Double cosets H\S_d/G. Component degrees |HsG|/|H| always sum to [S_d:H];
/// this is the bookkeeping that matches resolvent components when G is the
/// Galois group (per-component field degree = |HsG|/|H|, not the H-orbit size
/// on S_d/G, which would sum to [S_d:G] instead).
struct DoubleCosets {
    std::vector<Perm> representatives;
    std::vector<long> sizes;              // |H s G|
    std::vector<long> component_degrees;  // |H s G| / |H|
};

DoubleCosets double_cosets(const PermSubgroup& h, const PermSubgroup& g);

/// Orbits of <rho> on cosets of H, refined per double coset HsG. Entry i is
/// the orbit-size pattern of the cosets lying inside double coset i (ordered
/// as in `dc`). The patterns concatenate to orbit_pattern(rho).
std::vector<std::vector<int>> orbit_pattern_by_component(const CosetAction& cosets,
                                                         const DoubleCosets& dc,
                                                         const PermSubgroup& g, const Perm& rho);

/// Named subgroups: "Sd", "Ad", "trivial", "Young:3,2,1", and the degree
/// specific names D4 (d=4), AGL1F5 (d=5), S5prime/F36/F72 (d=6), plus the
/// transitive catalog names listed by `transitive_registry`.
PermSubgroup subgroup_by_name(int d, const std::string& name);

/// Representatives of conjugacy classes of transitive subgroups known to the
/// registry, with names. Complete for d = 4 and 5; for d = 6 it covers the
/// classes documented in the README.
std::vector<std::pair<std::string, PermSubgroup>> transitive_registry(int d);

}  // namespace scrollar

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scrollar/group.hpp"

namespace scrollar {

/// Validation strictness for cover profiles.
struct ProfileOptions {
    bool enforce_maroni = true;  // reject e_max above the Maroni bound
};

/// The numerical seed of every computation: a degree-d cover of the line with
/// genus g and splitting twists e_1 <= ... <= e_{d-1}.
class ScrollarProfile {
public:
    ScrollarProfile(int d, long g, std::vector<long> twists, ProfileOptions opts = {});

    int degree() const { return d_; }
    long genus() const { return g_; }
    const std::vector<long>& twists() const { return e_; }
    long twist_sum() const { return g_ + d_ - 1; }  // = sum of twists, enforced

    /// Largest-twist bound (2g + 2d - 2)/d as an exact rational.
    Rat maroni_bound() const;

    /// Non-fatal observations recorded at construction (e.g. e_1 = 0).
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    int d_;
    long g_;
    std::vector<long> e_;
    std::vector<std::string> warnings_;
};

/// A sorted multiset of scrollar invariants with a label describing where it
/// came from (a partition or a subgroup name).
struct ScrollarMultiset {
    std::vector<long> values;  // sorted ascending
    std::string label;
};

/// Subset sums of size i over the d-1 twists; the invariants of the hook
/// (d-i, 1^i). Cardinality binom(d-1, i).
ScrollarMultiset hook_scrollars(const ScrollarProfile& p, int i);

/// p(lambda) * (g + d - 1).
Int volume(const Partition& lambda, const ScrollarProfile& p);

/// Entrywise g+d-1 - value, re-sorted: the multiset of the conjugate
/// partition.
ScrollarMultiset dual_scrollars(const ScrollarMultiset& m, const ScrollarProfile& p);
ScrollarMultiset dual_scrollars(const ScrollarMultiset& m, long twist_sum);

struct ResolventSummary {
    std::string subgroup;
    long index = 0;
    /// (lambda, multiplicity) for every lambda with positive multiplicity in
    /// the coset character, canonical order.
    std::vector<std::pair<Partition, Int>> multiplicities;
    Int invariant_count;       // index - multiplicity of the trivial summand
    Int total_volume;          // sum over non-trivial lambda of mult * volume
    Int arithmetic_genus;      // p(H)(g+d-1) + 1 - index
    Rat maroni_bound;          // (2 genus + 2 index - 2)/index
    /// Populated exactly when every contributing non-trivial lambda is a
    /// hook; otherwise nullopt ("undetermined").
    std::optional<ScrollarMultiset> full_multiset;
};

ResolventSummary resolvent_summary(const PermSubgroup& h, const ScrollarProfile& p,
                                   const std::string& label = "");

/// Largest-invariant bound for the resolvent of H: the direct bound
/// (2 g_res + 2n - 2)/n together with the partition-wise bound (the best
/// bound over the contributing non-trivial lambdas); `bound` is their min.
struct ResolventBound {
    Rat direct;
    Rat partitionwise;
    Rat bound;
};

ResolventBound maroni_bound_for_subgroup(const PermSubgroup& h, const ScrollarProfile& p);
ResolventBound maroni_bound_for_subgroup(const PermSubgroup& h, long g);

/// (d^2 - sum d_i^2)/(d(d-1)) * (g+d-1) for lambda = (d_1, ..., d_r).
Rat maroni_bound_for_partition(const Partition& lambda, const ScrollarProfile& p);
Rat maroni_bound_for_partition(const Partition& lambda, long g);

/// The window for the i-th syzygy splitting type:
/// [ (i(i+1)+2)/(d(d-1)), ((i+1)(2d-i-2)-2)/(d(d-1)) ] * (g+d-1).
struct SplittingBounds {
    Rat lower;
    Rat upper;
};

SplittingBounds splitting_type_bounds(int i, const ScrollarProfile& p);
SplittingBounds splitting_type_bounds(int i, int d, long g);

/// beta_i = (d/(i+1)) (d-2-i) binom(d-2, i-1), for 1 <= i <= d-3.
Int betti_number(int i, int d);

/// (d-i-1, 2, 1^{i-1}): the partition whose invariants are the i-th syzygy
/// splitting types. dimension(splitting_partition(i,d)) == betti_number(i,d).
Partition splitting_partition(int i, int d);

}  // namespace scrollar

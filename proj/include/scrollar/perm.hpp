#pragma once

#include <string>
#include <vector>

#include "scrollar/partition.hpp"

namespace scrollar {

/// A permutation of {1,...,d}, stored as 0-based images. Composition is
/// (a*b)(x) = a(b(x)).
class Perm {
public:
    explicit Perm(int d);  // identity
    explicit Perm(std::vector<int> images_zero_based);

    /// Cycle notation with 1-based points, e.g. "(1 2 3 4)(5 6)". "()" or "e"
    /// denotes the identity. Points not mentioned are fixed.
    static Perm parse(int d, const std::string& text);
    static Perm from_cycles(int d, const std::vector<std::vector<int>>& one_based_cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[static_cast<size_t>(i)]; }  // 0-based
    const std::vector<int>& images() const { return img_; }

    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool is_identity() const;
    Partition cycle_type() const;
    std::string to_cycle_string() const;  // 1-based

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

/// Canonical permutation of cycle type e: consecutive cycles (1..e1)(..)...
Perm representative_of_type(const Partition& e);

/// The d-1 adjacent transpositions (1 2), (2 3), ..., (d-1 d).
std::vector<Perm> adjacent_transpositions(int d);

/// Factors p into adjacent transpositions (indices 0..d-2, meaning (i+1,i+2)).
std::vector<int> adjacent_word(const Perm& p);

/// Rank of p among all d! permutations in lexicographic image order.
long lehmer_rank(const Perm& p);
Perm perm_from_lehmer_rank(int d, long rank);

}  // namespace scrollar

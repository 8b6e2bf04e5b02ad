#pragma once

#include <compare>
#include <string>
#include <vector>

#include "scrollar/numeric.hpp"

namespace scrollar {

/// A partition: weakly decreasing sequence of positive integers. Used
/// interchangeably as an irreducible-representation label, a conjugacy class
/// (cycle type) of a symmetric group, and a ramification pattern.
class Partition {
public:
    Partition() = default;  // the empty partition of 0
    explicit Partition(std::vector<int> parts);

    /// Parses "3,2,1". Whitespace around parts is tolerated.
    static Partition parse(const std::string& text);

    int sum() const { return sum_; }          // the integer being partitioned
    int rows() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Column lengths of the diagram (transpose).
    Partition conjugate() const;

    /// Cell-wise containment: other[i] <= (*this)[i] for every row of other.
    bool contains(const Partition& inner) const;

    /// Number of parts equal to 1 (fixed points when read as a cycle type).
    int fixed_points() const;

    /// lcm of the parts; 1 for the empty partition.
    long lcm_parts() const;

    bool is_hook() const;      // (a, 1^k)
    bool is_rectangle2() const { return rows() <= 2; }  // at most two rows

    std::string to_string() const;  // "3,2,1"

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

/// All partitions of d in the canonical order: descending lexicographic,
/// starting at (d) and ending at (1^d). This order is used everywhere a
/// multiset of partitions is emitted.
std::vector<Partition> enumerate_partitions(int d);

/// Position of p in enumerate_partitions(p.sum()).
int partition_index(const Partition& p);

/// Dimension of the irreducible S_d-representation labelled by p, computed by
/// the hook length formula. (Enumeration of standard tableaux is the test
/// oracle, never this path.)
Int dimension(const Partition& p);

/// Number of permutations of cycle type e inside S_{e.sum()}.
Int class_size(const Partition& e);

/// Sign of any permutation with cycle type e.
int sign_of_class(const Partition& e);

/// Cycle type of rho^i for rho of cycle type e: each part c contributes
/// gcd(c,i) parts of size c/gcd(c,i). i = 0 gives (1^d).
Partition cycle_power_type(const Partition& e, long i);

/// Hook partition (d-i, 1^i); requires 0 <= i <= d-1.
Partition hook_partition(int d, int i);

// Skew shapes outer/inner. `inner` must be contained in `outer`.

/// True when outer/inner is connected (4-adjacency) and contains no 2x2
/// square of cells, i.e. it is a border strip.
bool is_border_strip(const Partition& outer, const Partition& inner);

/// Number of occupied rows of outer/inner minus one.
int skew_height(const Partition& outer, const Partition& inner);

}  // namespace scrollar

#pragma once

#include <map>
#include <vector>

#include "scrollar/partition.hpp"

namespace scrollar {

/// Exact character table of S_d. Rows are indexed by partitions (irreducible
/// labels), columns by partitions (cycle types), both in canonical order.
/// Tables are built once per degree and immutable afterwards; `of` is safe
/// for concurrent callers.
class CharacterTable {
public:
    static const CharacterTable& of(int d);

    int degree() const { return d_; }
    const std::vector<Partition>& classes() const { return classes_; }
    int class_index(const Partition& e) const;
    const Int& value(int lambda_idx, int class_idx) const {
        return values_[static_cast<size_t>(lambda_idx)][static_cast<size_t>(class_idx)];
    }
    const Int& value(const Partition& lambda, const Partition& e) const;
    const Int& size_of_class(int class_idx) const {
        return class_sizes_[static_cast<size_t>(class_idx)];
    }

private:
    explicit CharacterTable(int d);

    int d_;
    std::vector<Partition> classes_;
    std::vector<Int> class_sizes_;
    std::vector<std::vector<Int>> values_;
};

/// chi_lambda(e) by the border-strip recursion. Memoized across degrees;
/// thread-safe.
Int character(const Partition& lambda, const Partition& e);

/// (dim V_lambda - chi_lambda(transposition)) / 2; the exponent that governs
/// discriminants and volumes. Zero for d <= 1.
Int p_invariant(const Partition& lambda);

/// A class function of S_d with exact integer values, stored densely over all
/// classes in canonical order. Closed under +, -, and pointwise product
/// (tensor product of characters).
class VirtualCharacter {
public:
    VirtualCharacter(int d, std::vector<Int> values);
    static VirtualCharacter irreducible(const Partition& lambda);
    static VirtualCharacter trivial(int d);

    int degree() const { return d_; }
    const Int& at_class(int class_idx) const { return values_[static_cast<size_t>(class_idx)]; }
    const Int& at(const Partition& e) const;
    const Int& dim() const { return values_.back(); }  // class (1^d) is last in canonical order

    VirtualCharacter operator+(const VirtualCharacter& o) const;
    VirtualCharacter operator-(const VirtualCharacter& o) const;
    VirtualCharacter operator*(const VirtualCharacter& o) const;  // tensor

    bool operator==(const VirtualCharacter&) const = default;

private:
    int d_;
    std::vector<Int> values_;
};

/// Scalar product (1/d!) sum_e |class| V(e) W(e). Integral for genuine
/// characters; a non-integral result raises ConsistencyError.
Int mult(const VirtualCharacter& v, const VirtualCharacter& w);

/// Multiplicities of every irreducible inside v, in canonical partition order.
std::vector<Int> decompose(const VirtualCharacter& v);

/// Character of Sym^k V by the Newton recursion
///   k h_k(s) = sum_{i=1..k} chi(s^i) h_{k-i}(s).
/// Only k in {2,3,4} is supported.
VirtualCharacter symmetric_power(const VirtualCharacter& v, int k);

/// The four cell-move counts entering the combinatorial tensor rules:
///   c  - remove one cell, add one cell
///   d2 - remove two cells in order, add two cells in order
///   e2 - domino out and domino in of the same orientation
///   e2x- domino out and domino in of opposite orientations
struct TensorRuleCounts {
    long c = 0;
    long d2 = 0;
    long e2 = 0;
    long e2x = 0;
};

TensorRuleCounts tensor_rule_counts(const Partition& mu, const Partition& lambda);

/// The partition (d-i, 2, 1^{i-2}) for 2 <= i <= d-2, extended by
/// lambda_0 = (d), lambda_1 = (d-1,1), lambda_d = (1^d). Index d-1 is not
/// defined and raises ValidationError.
Partition lambda_chain(int d, int i);

}  // namespace scrollar

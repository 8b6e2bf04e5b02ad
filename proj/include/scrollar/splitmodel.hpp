#pragma once

#include <map>
#include <optional>
#include <vector>

#include "scrollar/cyclotomic.hpp"
#include "scrollar/partition.hpp"
#include "scrollar/perm.hpp"
#include "scrollar/qpoly.hpp"

namespace scrollar {

/// Finite Laurent series in u = t^{1/e} with Q(zeta_e) coefficients.
class Puiseux {
public:
    Puiseux() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Cyclo>& terms() const { return terms_; }
    long min_exponent() const;  // throws on zero
    void add_term(long u_exp, const Cyclo& c);

    Puiseux operator+(const Puiseux& o) const;
    Puiseux operator-(const Puiseux& o) const;
    Puiseux operator*(const Puiseux& o) const;
    Puiseux scaled(const Rat& s) const;

    bool operator==(const Puiseux& o) const { return terms_ == o.terms_; }

private:
    std::map<long, Cyclo> terms_;  // u-exponent -> nonzero coefficient
};

/// The split local model: the closure of the one-branch-point cover of order
/// e, base changed so it splits completely. Elements are tuples of Puiseux
/// series indexed by the e! permutations (Lehmer order); the generator
/// alpha_i has coordinate zeta^{pi(i)} u at pi. The symmetric group acts by
/// (sigma x)(pi) = x(pi sigma).
class SplitModel {
public:
    /// e <= 5 unless allow_large; the coordinate count is e!.
    explicit SplitModel(int e, bool allow_large = false);

    using Element = std::vector<Puiseux>;

    int order() const { return e_; }
    long size() const { return static_cast<long>(perms_.size()); }  // e!
    const CyclotomicField& field() const { return *field_; }
    const std::vector<Perm>& perms() const { return perms_; }

    Element zero() const { return Element(perms_.size()); }
    Element one() const;
    Element generator(int i) const;  // alpha_{i+1}, 0 <= i < e

    /// prod_i alpha_{i+1}^{exps[i]}; negative exponents give the infinity-side
    /// generators 1/alpha.
    Element monomial(const std::vector<int>& exps) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element scale(const Element& a, const Rat& s) const;
    Element shift_t(const Element& a, long k) const;  // multiply by t^k
    bool equal(const Element& a, const Element& b) const;

    Element act(const Perm& sigma, const Element& x) const;

    /// Sum of all conjugates. All coordinates agree, so the common value is
    /// returned; for model elements its u-exponents are divisible by e with
    /// rational coefficients, which trace_poly enforces.
    Puiseux trace(const Element& x) const;
    QPoly trace_poly(const Element& x) const;

    /// Central projection onto the lambda-isotypic part.
    Element isotypic_project(const Partition& lambda, const Element& x) const;

    /// Canonical exponent vectors 0 <= l_i < i+1 (i 0-based), Lehmer-ordered.
    const std::vector<std::vector<int>>& monomial_exponents() const { return exps_; }
    std::vector<Element> monomial_basis() const;   // k[t]-basis at zero
    std::vector<Element> infinity_basis() const;   // k[1/t]-basis at infinity

    enum class Side { zero, infinity };

    /// Coordinates of x over Q[t] (side zero, u-exponents >= 0) or Q[1/t]
    /// (side infinity, u-exponents <= 0) in the slot basis
    /// (permutation, u-residue, cyclotomic component).
    std::optional<std::vector<QPoly>> flatten(const Element& x, Side side) const;

    /// Is x a Q[t]-combination of the given basis (side zero), or a
    /// Q[1/t]-combination (side infinity)?
    bool in_lattice(const std::vector<Element>& basis, const Element& x, Side side) const;

    /// Coordinates of x in the basis over the rational function field, as
    /// (numerator polynomial, denominator power of t) when the denominator is
    /// a monomial; nullopt when x is outside the span or a denominator is not
    /// a t-power.
    std::optional<LaurentMatrix> transition_matrix(const std::vector<Element>& from_basis,
                                                   const std::vector<Element>& to_basis) const;

    struct Lattice {
        std::vector<Element> elements;
        std::vector<std::vector<QPoly>> monomial_coords;  // per element
    };

    /// Intersection of the monomial lattice with the lambda-isotypic part:
    /// kernel of (1 - projector) over Q[t]. Rank (dim lambda)^2, else
    /// ConsistencyError.
    Lattice isotypic_lattice(const Partition& lambda) const;

    /// t-adic valuation of det(Tr(v_a v_b)) for a basis of lattice elements.
    long gram_valuation(const std::vector<Element>& basis) const;

    /// Same for the full monomial basis, via the monomial trace structure
    /// (every pairing is an integer times a t-power), verified at runtime.
    long full_gram_valuation() const;

private:
    Cyclo chi_rat(const Partition& lambda, const Perm& sigma) const;

    int e_;
    const CyclotomicField* field_;
    std::vector<Perm> perms_;
    std::vector<std::vector<int>> exps_;
};

}  // namespace scrollar

#pragma once

#include <vector>

#include "scrollar/numeric.hpp"

namespace scrollar {

/// Univariate polynomial over Q in the variable t. Coefficients dense,
/// trailing zeros stripped; the zero polynomial has an empty coefficient
/// vector and degree -1.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rat& constant);  // NOLINT: implicit by design
    QPoly(long constant) : QPoly(Rat(constant)) {}
    explicit QPoly(std::vector<Rat> coeffs);

    static QPoly monomial(const Rat& c, long k);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    long valuation() const;  // t-adic; -1 for the zero polynomial
    const Rat& coeff(long k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const { return c_.back(); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }

    /// Quotient when the division is exact; ConsistencyError otherwise.
    QPoly div_exact(const QPoly& o) const;

    Rat eval(const Rat& x) const;
    std::string to_string() const;  // human readable, e.g. "t^2 - 1/2 t"

    bool operator==(const QPoly&) const = default;

private:
    void trim();
    std::vector<Rat> c_;
};

using QPolyMatrix = std::vector<std::vector<QPoly>>;  // row major

/// Basis of { x in Q[t]^n : M x = 0 }, as columns. The kernel of a
/// polynomial matrix is automatically saturated (pure) in Q[t]^n.
std::vector<std::vector<QPoly>> kernel_basis(const QPolyMatrix& m);

/// Exact determinant by evaluation at deg-bound + 1 integer points and
/// Newton interpolation. Intended for small exact matrices.
QPoly determinant(const QPolyMatrix& m);

/// Determinant of a rational matrix by fraction-free style elimination.
Rat determinant(std::vector<std::vector<Rat>> m);

/// Laurent monomial matrix entries are represented as QPoly pairs
/// (numerator, power shift): entry = poly * t^{-shift}, one shift per matrix.
struct LaurentMatrix {
    QPolyMatrix poly;  // entries after clearing t^{-shift}
    long shift = 0;    // actual entry (i,j) = poly[i][j] * t^{-shift}
};

/// The unique sorted r_1 <= ... <= r_n such that the transition matrix
/// factors as U diag(t^{-r_i}) V with U in GL_n(Q[t]), V in GL_n(Q[t^{-1}]).
/// Requires det(transition) to be a monomial (the two lattices must agree
/// away from 0 and infinity); otherwise ValidationError.
std::vector<long> lattice_pair_invariants(const LaurentMatrix& transition);

}  // namespace scrollar

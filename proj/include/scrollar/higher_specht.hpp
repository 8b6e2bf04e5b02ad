#pragma once

#include <map>

#include "scrollar/splitmodel.hpp"
#include "scrollar/tableau.hpp"

namespace scrollar {

/// Integer multivariate polynomial in x_1..x_d, exponent-vector keyed.
using ExpVec = std::vector<int>;
using SymPoly = std::map<ExpVec, Int>;

/// The starting monomial: x_i gets the subscript, in the charge word of S, of
/// the cell that holds i in T.
ExpVec charge_monomial(const StandardTableau& T, const StandardTableau& S);

/// Young symmetrizer combination: sum over column permutations tau (signed)
/// and row permutations sigma of T of (tau sigma) applied to the charge
/// monomial. Homogeneous of degree charge(S).
SymPoly higher_specht_polynomial(const StandardTableau& T, const StandardTableau& S);

std::string sympoly_to_string(const SymPoly& p);

/// Substitute x_i -> alpha_i in the split model.
SplitModel::Element evaluate_poly(const SplitModel& model, const SymPoly& p);

/// The checks the evaluated polynomials must pass inside the model.
struct SpechtEvaluation {
    SplitModel::Element value;
    bool in_zero_lattice = false;       // member of the monomial lattice
    bool isotypic_pure = false;         // fixed by the lambda projector
    bool infinity_after_shift = false;  // t^{-m(S)} * value lies at infinity
    int shift = 0;                      // m(S)
};

SpechtEvaluation evaluate_specht(const SplitModel& model, const StandardTableau& T,
                                 const StandardTableau& S);

}  // namespace scrollar

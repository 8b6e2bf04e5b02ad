#pragma once

#include <optional>

#include "scrollar/group.hpp"
#include "scrollar/tableau.hpp"

namespace scrollar {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

/// An exact matrix representation of S_d, given by the images of the d-1
/// adjacent transpositions.
struct Rep {
    int d = 0;
    long dim = 0;
    std::vector<RatMatrix> gens;
};

/// Irreducible representation on the standard-tableau basis in seminormal
/// form: rational entries built from axial distances. d above the bound is
/// refused (matrix sizes explode).
Rep specht_rep(const Partition& lambda, int degree_bound = 8);

Rep tensor_rep(const Rep& a, const Rep& b);
Rep sym2_rep(const Rep& a);

RatMatrix rep_matrix(const Rep& rep, const Perm& p);
Rat rep_trace(const Rep& rep, const Perm& p);

/// A spanning vector of (fixed space of H) intersected with the mu-isotypic
/// part, when that space is a line; nullopt when it is zero. Dimension two or
/// more raises ValidationError (the callers' preconditions exclude it).
std::optional<RatVector> fixed_isotypic_vector(const Rep& rep, const PermSubgroup& h,
                                               const Partition& mu);

/// The distinguished vectors behind the resolution maps, i = 1..d-2:
///   i = 1:        Sym^2 V_(d-1,1), fixed by S_(d-2,2), generating V_(d-2,2)
///   1 < i < d-2:  V_{lambda_i} (x) V_(d-1,1), fixed by S_{lambda_{i+1}},
///                 generating V_{lambda_{i+1}}
///   i = d-2:      V_{lambda_{d-2}} (x) Sym^2 V_(d-1,1), the sign line
std::optional<RatVector> resolution_pivot_vector(int d, int i);

}  // namespace scrollar

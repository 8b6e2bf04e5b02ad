#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scrollar/scrollar.hpp"

namespace scrollar {

/// One branch point of the cover: an opaque label plus its ramification
/// pattern (a partition of d).
struct BranchEntry {
    std::string label;
    Partition pattern;
};
using BranchData = std::vector<BranchEntry>;

/// sum (e_j - 1): the t-adic discriminant exponent of the base order at a
/// tame point with pattern e.
long tame_exponent(const Partition& e);

/// Exponent of disc at a point of pattern e for the lambda-isotypic order:
/// p(lambda) dim(lambda) tame(e).
Int order_disc_exponent(const Partition& e, const Partition& lambda);

/// Same for the H-fixed order: p(H) tame(e).
Int order_disc_exponent(const Partition& e, const PermSubgroup& h);

/// Exponent of disc for the maximal order of the H-resolvent:
/// (1/lcm(e)) sum_{i=1..lcm-1} n(H, e^i) with n(H,s) = index - #fixed cosets.
/// Not being an integer violates tameness and raises ConsistencyError.
Int maximal_disc_exponent(const CosetAction& cosets, const Partition& e);

/// Ramification pattern above a point of pattern e in the normalized
/// resolvent: orbit sizes of <rho> on the cosets, rho of type e.
Partition resolvent_local_pattern(const CosetAction& cosets, const Partition& e);

/// Equality criterion: for every i = 1..lcm(e)-1,
///   (dim - chi_lambda(e^i)) * 2 == (dim - chi_lambda(transposition)) * (d - fix(e^i)).
bool lambda_maximal_by_characters(const Partition& lambda, const Partition& e);

/// Closed three-case classification: e in {(1^d), (2,1^{d-2})}, or lambda in
/// {(d), (d-1,1)}, or lambda has two rows and e = (3, 1^{d-3}).
bool lambda_maximal_by_classification(const Partition& lambda, const Partition& e);

/// Both criteria, cross-checked; disagreement raises ConsistencyError.
bool is_lambda_maximal(const Partition& lambda, const Partition& e);

/// Everything this module can say about one branch pattern for a fixed H.
struct LocalAnalysis {
    Partition e;
    long lcm = 1;
    long tame = 0;                 // disc exponent of the base order
    Int order_exponent;            // disc exponent of the H-fixed order
    Int maximal_exponent;          // disc exponent of the maximal order
    Partition local_pattern;       // pattern e' upstairs
    std::vector<std::pair<Partition, bool>> lambda_maximal;  // contributing lambdas
};

LocalAnalysis analyze_local(const CosetAction& cosets, const Partition& e);

struct ComponentGeometry {
    long degree = 0;
    long euler = 0;                // 2*degree - ramification defect
    std::optional<long> genus;     // when connectedness pins it down
    bool splits_into_lines = false;  // unramified component: degree copies of P^1
};

struct ResolventGeometry {
    bool smooth = false;
    std::optional<bool> irreducible;  // nullopt when no Galois group was given
    std::vector<long> component_degrees;
    Int arithmetic_genus;
    long normalization_euler = 0;  // sum of 2-2g over the normalized pieces
    std::vector<ComponentGeometry> components;
    std::vector<std::string> warnings;
};

/// Smoothness, components, genus and the normalization data of the
/// H-resolvent for the given branch datum. `galois`, when present, refines
/// components via double cosets and decides irreducibility.
ResolventGeometry resolvent_geometry(const PermSubgroup& h, const BranchData& branch,
                                     const std::optional<PermSubgroup>& galois,
                                     const ScrollarProfile& profile);
ResolventGeometry resolvent_geometry(const PermSubgroup& h, const BranchData& branch,
                                     const std::optional<PermSubgroup>& galois, long g);

struct AddendumRow {
    Partition e;
    long base_exponent = 0;  // disc(O_K)
    Int order_exponent;      // disc of the H-fixed order
    Int maximal_exponent;    // disc of the maximal order
    Partition local_pattern;
};

/// One row per partition of d, all columns computed (nothing tabulated).
std::vector<AddendumRow> addendum_table(const PermSubgroup& h);

/// Published reference values for the three classical tables
/// (4,D4), (5,AGL1F5), (6,S5prime), cell-encoded exactly as printed; two
/// cells are known misprints and fail the tame consistency checks that the
/// computed values pass. Used for the first-class discrepancy report.
struct ReferenceRow {
    std::string e;
    long base_exponent;
    long order_exponent;
    long maximal_exponent;
    std::string local_pattern;
};

std::optional<std::vector<ReferenceRow>> reference_addendum(int d, const std::string& name);

}  // namespace scrollar

#include "scrollar/ramify.hpp"

#include <algorithm>
#include <numeric>

namespace scrollar {

long tame_exponent(const Partition& e) {
    return e.sum() - e.rows();
}

Int order_disc_exponent(const Partition& e, const Partition& lambda) {
    if (e.sum() != lambda.sum()) throw ValidationError("pattern and partition sizes differ");
    return p_invariant(lambda) * dimension(lambda) * tame_exponent(e);
}

Int order_disc_exponent(const Partition& e, const PermSubgroup& h) {
    if (e.sum() != h.degree()) throw ValidationError("pattern size must equal the degree");
    return p_invariant(h) * tame_exponent(e);
}

Int maximal_disc_exponent(const CosetAction& cosets, const Partition& e) {
    long l = e.lcm_parts();
    Int total = 0;
    for (long i = 1; i < l; ++i) {
        Perm rho = representative_of_type(cycle_power_type(e, i));
        total += Int(cosets.index()) - cosets.fixed_cosets(rho);
    }
    if (total % l != 0)
        throw ConsistencyError("maximal discriminant exponent is not integral (tameness violated)");
    return total / l;
}

Partition resolvent_local_pattern(const CosetAction& cosets, const Partition& e) {
    return cosets.orbit_pattern(representative_of_type(e));
}

bool lambda_maximal_by_characters(const Partition& lambda, const Partition& e) {
    if (lambda.sum() != e.sum()) throw ValidationError("partition sizes differ");
    int d = lambda.sum();
    if (d < 2) return true;
    Int dim = dimension(lambda);
    std::vector<int> tparts{2};
    tparts.insert(tparts.end(), static_cast<size_t>(d - 2), 1);
    Int denom = dim - character(lambda, Partition(tparts));
    long l = e.lcm_parts();
    for (long i = 1; i < l; ++i) {
        Partition ei = cycle_power_type(e, i);
        Int lhs = (dim - character(lambda, ei)) * 2;
        Int rhs = denom * (d - ei.fixed_points());
        if (lhs != rhs) return false;
    }
    return true;
}

bool lambda_maximal_by_classification(const Partition& lambda, const Partition& e) {
    int d = lambda.sum();
    if (e.rows() == d) return true;                                      // (1^d)
    if (e[0] == 2 && e.rows() == d - 1) return true;                     // (2, 1^{d-2})
    if (lambda.rows() == 1) return true;                                 // (d)
    if (lambda == hook_partition(d, 1)) return true;                     // (d-1, 1)
    if (lambda.rows() == 2 && e[0] == 3 && e.rows() == d - 2) return true;  // (a,b), (3,1^{d-3})
    return false;
}

bool is_lambda_maximal(const Partition& lambda, const Partition& e) {
    bool by_chars = lambda_maximal_by_characters(lambda, e);
    bool by_cases = lambda_maximal_by_classification(lambda, e);
    if (by_chars != by_cases)
        throw ConsistencyError("maximality criteria disagree for lambda=" + lambda.to_string() +
                               ", e=" + e.to_string());
    return by_chars;
}

LocalAnalysis analyze_local(const CosetAction& cosets, const Partition& e) {
    const PermSubgroup& h = cosets.subgroup();
    LocalAnalysis out;
    out.e = e;
    out.lcm = e.lcm_parts();
    out.tame = tame_exponent(e);
    out.order_exponent = order_disc_exponent(e, h);
    out.maximal_exponent = maximal_disc_exponent(cosets, e);
    out.local_pattern = resolvent_local_pattern(cosets, e);

    if (Int(tame_exponent(out.local_pattern)) != out.maximal_exponent)
        throw ConsistencyError("tame defect of e' does not match the maximal disc exponent");
    if (out.lcm % out.local_pattern.lcm_parts() != 0)
        throw ConsistencyError("lcm(e') does not divide lcm(e)");
    if (out.order_exponent < out.maximal_exponent)
        throw ConsistencyError("order discriminant below the maximal one");

    auto mults = decompose(cosets.permutation_character());
    const auto& classes = CharacterTable::of(h.degree()).classes();
    bool all_max = true;
    for (size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] == 0 || classes[i].rows() == 1) continue;
        bool m = is_lambda_maximal(classes[i], e);
        out.lambda_maximal.emplace_back(classes[i], m);
        all_max = all_max && m;
    }
    if (all_max != (out.order_exponent == out.maximal_exponent))
        throw ConsistencyError("maximality flags conflict with discriminant comparison");
    return out;
}

ResolventGeometry resolvent_geometry(const PermSubgroup& h, const BranchData& branch,
                                     const std::optional<PermSubgroup>& galois,
                                     const ScrollarProfile& profile) {
    if (profile.degree() != h.degree())
        throw ValidationError("profile degree must match the subgroup");
    return resolvent_geometry(h, branch, galois, profile.genus());
}

ResolventGeometry resolvent_geometry(const PermSubgroup& h, const BranchData& branch,
                                     const std::optional<PermSubgroup>& galois, long g) {
    int d = h.degree();
    long defect_total = 0;
    for (const auto& b : branch) {
        if (b.pattern.sum() != d)
            throw ValidationError("branch pattern '" + b.pattern.to_string() +
                                  "' is not a partition of d");
        defect_total += tame_exponent(b.pattern);
    }

    ResolventGeometry out;
    if (defect_total != 2 * g + 2 * d - 2)
        out.warnings.push_back(
            "branch defects sum to " + std::to_string(defect_total) + ", not 2g+2d-2 = " +
            std::to_string(2 * g + 2 * d - 2) +
            "; genus statements assume a complete branch list");

    CosetAction cosets(h);
    auto mults = decompose(cosets.permutation_character());
    const auto& classes = CharacterTable::of(d).classes();

    out.smooth = true;
    for (const auto& b : branch)
        for (size_t i = 0; i < mults.size(); ++i) {
            if (mults[i] == 0 || classes[i].rows() == 1) continue;
            if (!is_lambda_maximal(classes[i], b.pattern)) out.smooth = false;
        }

    Int ph = p_invariant(h);
    out.arithmetic_genus = ph * (g + d - 1) + 1 - cosets.index();

    // total Euler characteristic of the normalization: additive over
    // components, so computable without the Galois group
    long upstairs_defect = 0;
    for (const auto& b : branch)
        upstairs_defect += tame_exponent(resolvent_local_pattern(cosets, b.pattern));
    out.normalization_euler = 2 * cosets.index() - upstairs_defect;

    if (!galois) {
        out.irreducible = std::nullopt;
        ComponentGeometry c;
        c.degree = cosets.index();
        c.euler = out.normalization_euler;
        if (upstairs_defect == 0) {
            c.splits_into_lines = true;
            for (long i = 0; i < c.degree; ++i) out.component_degrees.push_back(1);
        } else {
            out.component_degrees.push_back(c.degree);
            if (c.euler <= 2 && c.euler % 2 == 0) c.genus = 1 - c.euler / 2;
        }
        out.components.push_back(c);
        return out;
    }

    const PermSubgroup& gal = *galois;
    if (gal.degree() != d) throw ValidationError("Galois group degree mismatch");
    out.irreducible = product_is_full(gal, h);

    DoubleCosets dc = double_cosets(h, gal);
    size_t ncomp = dc.representatives.size();
    std::vector<long> comp_defect(ncomp, 0);
    for (const auto& b : branch) {
        // inertia generator must exist inside G
        const Perm* rho = nullptr;
        for (const auto& el : gal.elements())
            if (el.cycle_type() == b.pattern) {
                rho = &el;
                break;
            }
        if (!rho)
            throw ValidationError("Galois group contains no element of cycle type " +
                                  b.pattern.to_string());
        auto patterns = orbit_pattern_by_component(cosets, dc, gal, *rho);
        for (size_t c = 0; c < ncomp; ++c)
            for (int part : patterns[c]) comp_defect[c] += part - 1;
    }

    long euler_check = 0;
    for (size_t c = 0; c < ncomp; ++c) {
        ComponentGeometry comp;
        comp.degree = dc.component_degrees[c];
        comp.euler = 2 * comp.degree - comp_defect[c];
        euler_check += comp.euler;
        if (comp_defect[c] == 0) {
            comp.splits_into_lines = true;
            for (long i = 0; i < comp.degree; ++i) out.component_degrees.push_back(1);
        } else {
            out.component_degrees.push_back(comp.degree);
            if (comp.euler <= 2 && comp.euler % 2 == 0) comp.genus = 1 - comp.euler / 2;
        }
        out.components.push_back(comp);
    }
    if (euler_check != out.normalization_euler)
        throw ConsistencyError("component Euler characteristics do not sum to the total");
    return out;
}

std::vector<AddendumRow> addendum_table(const PermSubgroup& h) {
    CosetAction cosets(h);
    std::vector<AddendumRow> rows;
    for (const auto& e : enumerate_partitions(h.degree())) {
        LocalAnalysis a = analyze_local(cosets, e);
        rows.push_back(AddendumRow{e, a.tame, a.order_exponent, a.maximal_exponent,
                                   a.local_pattern});
    }
    return rows;
}

std::optional<std::vector<ReferenceRow>> reference_addendum(int d, const std::string& name) {
    if (d == 4 && name == "D4")
        return std::vector<ReferenceRow>{
            {"1,1,1,1", 0, 0, 0, "1,1,1"}, {"2,1,1", 1, 1, 1, "2,1"}, {"2,2", 2, 2, 0, "1,1,1"},
            {"3,1", 2, 2, 2, "3"},         {"4", 3, 3, 1, "2,1"},
        };
    if (d == 5 && name == "AGL1F5")
        return std::vector<ReferenceRow>{
            {"1,1,1,1,1", 0, 0, 0, "1,1,1,1,1,1"},
            {"2,1,1,1", 1, 3, 3, "2,1,1,1,1"},  // e' cell is a known misprint
            {"2,2,1", 2, 6, 2, "2,2,1,1"},
            {"3,1,1", 2, 6, 4, "3,3"},
            {"3,2", 3, 9, 5, "6"},
            {"4,1", 3, 9, 3, "4,1,1"},
            {"5", 4, 12, 4, "5,1"},
        };
    if (d == 6 && name == "S5prime")
        return std::vector<ReferenceRow>{
            {"1,1,1,1,1,1", 0, 0, 0, "1,1,1,1,1,1"},
            {"2,1,1,1,1", 1, 3, 3, "2,2,2"},
            {"2,2,1,1", 2, 6, 2, "2,2,1,1"},
            {"2,2,2", 3, 9, 1, "2,1,1,1,1"},
            {"3,1,1,1", 2, 6, 4, "3,3"},
            {"3,2,1", 3, 9, 5, "6"},
            {"3,3", 4, 12, 2, "3,1,1,1"},
            {"4,1,1", 3, 12, 3, "4,1,1"},  // order-disc cell is a known misprint
            {"4,2", 4, 12, 4, "4,2"},
            {"5,1", 4, 12, 4, "5,1"},
            {"6", 5, 15, 3, "3,2,1"},
        };
    return std::nullopt;
}

}  // namespace scrollar

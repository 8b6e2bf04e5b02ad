#include "scrollar/higher_specht.hpp"

#include <algorithm>

namespace scrollar {

namespace {

/// All permutations of the whole set {1..d} moving only the given values,
/// as full Perms, one list per grouping; combined by product.
void group_perms_rec(int d, const std::vector<std::vector<int>>& blocks, size_t at, Perm acc,
                     std::vector<Perm>& out) {
    if (at == blocks.size()) {
        out.push_back(std::move(acc));
        return;
    }
    std::vector<int> values = blocks[at];
    std::sort(values.begin(), values.end());
    std::vector<int> arranged = values;
    do {
        std::vector<int> img(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) img[static_cast<size_t>(i)] = i;
        for (size_t i = 0; i < values.size(); ++i)
            img[static_cast<size_t>(values[i] - 1)] = arranged[i] - 1;
        group_perms_rec(d, blocks, at + 1, Perm(img) * acc, out);
    } while (std::next_permutation(arranged.begin(), arranged.end()));
}

std::vector<Perm> stabilizer_perms(int d, const std::vector<std::vector<int>>& blocks) {
    std::vector<Perm> out;
    group_perms_rec(d, blocks, 0, Perm(d), out);
    return out;
}

std::vector<std::vector<int>> row_blocks(const StandardTableau& t) {
    return t.rows();
}

std::vector<std::vector<int>> column_blocks(const StandardTableau& t) {
    std::vector<std::vector<int>> cols;
    const Partition& shape = t.shape();
    int width = shape.rows() ? shape[0] : 0;
    cols.resize(static_cast<size_t>(width));
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape[r]; ++c) cols[static_cast<size_t>(c)].push_back(t.entry(r, c));
    return cols;
}

int perm_sign(const Perm& p) {
    return sign_of_class(p.cycle_type());
}

ExpVec apply_perm(const Perm& p, const ExpVec& exps) {
    ExpVec out(exps.size(), 0);
    for (size_t i = 0; i < exps.size(); ++i) out[static_cast<size_t>(p.apply(static_cast<int>(i)))] = exps[i];
    return out;
}

}  // namespace

ExpVec charge_monomial(const StandardTableau& T, const StandardTableau& S) {
    if (T.shape() != S.shape()) throw ValidationError("tableaux must share a shape");
    int d = T.size();
    ChargeData cd = charge_data(S);
    ExpVec exps(static_cast<size_t>(d), 0);
    for (int v = 1; v <= d; ++v) {
        auto [r, c] = T.cell_of(v);
        exps[static_cast<size_t>(v - 1)] = cd.subscript(S.entry(r, c));
    }
    return exps;
}

SymPoly higher_specht_polynomial(const StandardTableau& T, const StandardTableau& S) {
    int d = T.size();
    ExpVec base = charge_monomial(T, S);
    SymPoly out;
    auto columns = stabilizer_perms(d, column_blocks(T));
    auto rows = stabilizer_perms(d, row_blocks(T));
    for (const auto& tau : columns) {
        int sign = perm_sign(tau);
        for (const auto& sigma : rows) {
            ExpVec moved = apply_perm(tau * sigma, base);
            auto it = out.find(moved);
            if (it == out.end())
                out.emplace(std::move(moved), Int(sign));
            else {
                it->second += sign;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

std::string sympoly_to_string(const SymPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (const auto& [exps, coeff] : p) {
        std::string term;
        Int a = coeff > 0 ? coeff : Int(-coeff);
        if (a != 1) term += a.get_str();
        bool constant = true;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            constant = false;
            if (!term.empty()) term += "*";
            term += "x" + std::to_string(i + 1);
            if (exps[i] > 1) term += "^" + std::to_string(exps[i]);
        }
        if (constant && a == 1) term = a.get_str();
        if (out.empty())
            out = (coeff < 0 ? "-" : "") + term;
        else
            out += (coeff < 0 ? " - " : " + ") + term;
    }
    return out;
}

SplitModel::Element evaluate_poly(const SplitModel& model, const SymPoly& p) {
    SplitModel::Element acc = model.zero();
    for (const auto& [exps, coeff] : p) {
        if (static_cast<int>(exps.size()) != model.order())
            throw ValidationError("polynomial arity does not match the model order");
        acc = model.add(acc, model.scale(model.monomial(exps), Rat(coeff)));
    }
    return acc;
}

SpechtEvaluation evaluate_specht(const SplitModel& model, const StandardTableau& T,
                                 const StandardTableau& S) {
    if (T.size() != model.order()) throw ValidationError("tableau size must equal the model order");
    SpechtEvaluation out;
    out.value = evaluate_poly(model, higher_specht_polynomial(T, S));
    out.shift = charge_data(S).max_subscript;

    auto monomials = model.monomial_basis();
    out.in_zero_lattice = model.in_lattice(monomials, out.value, SplitModel::Side::zero);
    out.isotypic_pure = model.equal(model.isotypic_project(T.shape(), out.value), out.value);
    out.infinity_after_shift = model.in_lattice(
        model.infinity_basis(), model.shift_t(out.value, -out.shift), SplitModel::Side::infinity);
    return out;
}

}  // namespace scrollar

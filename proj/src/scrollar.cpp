#include "scrollar/scrollar.hpp"

#include <algorithm>

namespace scrollar {

ScrollarProfile::ScrollarProfile(int d, long g, std::vector<long> twists, ProfileOptions opts)
    : d_(d), g_(g), e_(std::move(twists)) {
    if (d_ < 3) throw ValidationError("profile degree must be at least 3");
    if (d_ == 3) warnings_.push_back("degree 3 is tolerated; most statements assume d >= 4");
    if (g_ < 0) throw ValidationError("genus must be nonnegative");
    if (static_cast<int>(e_.size()) != d_ - 1)
        throw ValidationError("profile needs exactly d-1 twists");
    long sum = 0;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < 0) throw ValidationError("twists must be nonnegative");
        if (i > 0 && e_[i] < e_[i - 1]) throw ValidationError("twists must be sorted ascending");
        sum += e_[i];
    }
    if (sum != g_ + d_ - 1)
        throw ValidationError("twists must sum to g+d-1 = " + std::to_string(g_ + d_ - 1));
    if (opts.enforce_maroni && Rat(e_.back()) > maroni_bound())
        throw ValidationError("largest twist exceeds the Maroni bound (2g+2d-2)/d; pass the bypass flag to accept");
    if (g_ >= 1 && e_.front() == 0)
        warnings_.push_back("e_1 = 0: the cover cannot be connected; formulas remain arithmetic");
}

Rat ScrollarProfile::maroni_bound() const {
    Rat b(2 * g_ + 2 * d_ - 2, d_);
    b.canonicalize();
    return b;
}

ScrollarMultiset hook_scrollars(const ScrollarProfile& p, int i) {
    int n = p.degree() - 1;
    if (i < 0 || i > n) throw ValidationError("hook index out of range");
    ScrollarMultiset out;
    out.label = hook_partition(p.degree(), i).to_string();
    // enumerate i-element subsets of the twists
    std::vector<int> idx(static_cast<size_t>(i));
    for (int k = 0; k < i; ++k) idx[static_cast<size_t>(k)] = k;
    while (true) {
        long s = 0;
        for (int k : idx) s += p.twists()[static_cast<size_t>(k)];
        out.values.push_back(s);
        if (i == 0) break;
        int pos = i - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - i + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int k = pos + 1; k < i; ++k)
            idx[static_cast<size_t>(k)] = idx[static_cast<size_t>(k - 1)] + 1;
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

Int volume(const Partition& lambda, const ScrollarProfile& p) {
    if (lambda.sum() != p.degree()) throw ValidationError("partition size must equal the degree");
    return p_invariant(lambda) * p.twist_sum();
}

ScrollarMultiset dual_scrollars(const ScrollarMultiset& m, long twist_sum) {
    ScrollarMultiset out;
    out.label = m.label + "*";
    for (long v : m.values) out.values.push_back(twist_sum - v);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

ScrollarMultiset dual_scrollars(const ScrollarMultiset& m, const ScrollarProfile& p) {
    return dual_scrollars(m, p.twist_sum());
}

ResolventSummary resolvent_summary(const PermSubgroup& h, const ScrollarProfile& p,
                                   const std::string& label) {
    if (h.degree() != p.degree()) throw ValidationError("subgroup degree must match the profile");
    const auto& table = CharacterTable::of(p.degree());
    VirtualCharacter ind = permutation_character(h);
    auto mults = decompose(ind);

    ResolventSummary out;
    out.subgroup = label;
    out.index = static_cast<long>(mpz_get_si(ind.dim().get_mpz_t()));
    out.invariant_count = 0;
    out.total_volume = 0;
    bool all_hooks = true;
    for (size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] == 0) continue;
        const Partition& lambda = table.classes()[i];
        out.multiplicities.emplace_back(lambda, mults[i]);
        if (lambda.rows() == 1) continue;  // trivial summand carries invariant 0
        out.invariant_count += mults[i] * dimension(lambda);
        out.total_volume += mults[i] * volume(lambda, p);
        if (!lambda.is_hook()) all_hooks = false;
    }

    Int trivial_mult = mults.empty() ? Int(0) : mults.front();
    if (out.invariant_count != Int(out.index) - trivial_mult)
        throw ConsistencyError("resolvent invariant count bookkeeping failed");

    Int ph = p_invariant(h);
    out.arithmetic_genus = ph * p.twist_sum() + 1 - out.index;
    if (out.total_volume != ph * p.twist_sum())
        throw ConsistencyError("resolvent volume bookkeeping failed");
    Rat mb(2 * out.arithmetic_genus + 2 * out.index - 2, out.index);
    mb.canonicalize();
    out.maroni_bound = mb;

    if (all_hooks) {
        ScrollarMultiset full;
        full.label = label.empty() ? "resolvent" : label;
        for (const auto& [lambda, m] : out.multiplicities) {
            if (lambda.rows() == 1) continue;
            int i = lambda.sum() - lambda[0];  // (d-i, 1^i)
            auto hooks = hook_scrollars(p, i);
            long copies = mpz_get_si(m.get_mpz_t());
            for (long c = 0; c < copies; ++c)
                full.values.insert(full.values.end(), hooks.values.begin(), hooks.values.end());
        }
        std::sort(full.values.begin(), full.values.end());
        out.full_multiset = std::move(full);
    }
    return out;
}

ResolventBound maroni_bound_for_subgroup(const PermSubgroup& h, long g) {
    const auto& table = CharacterTable::of(h.degree());
    auto mults = decompose(permutation_character(h));
    long index = 0;
    {
        Int idx = 0;
        for (size_t i = 0; i < mults.size(); ++i) idx += mults[i] * dimension(table.classes()[i]);
        index = static_cast<long>(mpz_get_si(idx.get_mpz_t()));
    }
    long twist = g + h.degree() - 1;
    Int genus = p_invariant(h) * twist + 1 - index;
    ResolventBound out;
    out.direct = Rat(2 * genus + 2 * index - 2) / Rat(index);
    out.direct.canonicalize();
    bool have = false;
    for (size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] == 0 || table.classes()[i].rows() == 1) continue;
        Rat b = maroni_bound_for_partition(table.classes()[i], g);
        if (!have || b > out.partitionwise) out.partitionwise = b;
        have = true;
    }
    if (!have) out.partitionwise = 0;
    out.bound = std::min(out.direct, out.partitionwise);
    return out;
}

ResolventBound maroni_bound_for_subgroup(const PermSubgroup& h, const ScrollarProfile& p) {
    if (h.degree() != p.degree()) throw ValidationError("subgroup degree must match the profile");
    return maroni_bound_for_subgroup(h, p.genus());
}

Rat maroni_bound_for_partition(const Partition& lambda, long g) {
    long d = lambda.sum();
    long sq = 0;
    for (int part : lambda.parts()) sq += static_cast<long>(part) * part;
    Rat b(d * d - sq, d * (d - 1));
    b *= Rat(g + d - 1);
    b.canonicalize();
    return b;
}

Rat maroni_bound_for_partition(const Partition& lambda, const ScrollarProfile& p) {
    if (lambda.sum() != p.degree()) throw ValidationError("partition size must equal the degree");
    return maroni_bound_for_partition(lambda, p.genus());
}

SplittingBounds splitting_type_bounds(int i, int d, long g) {
    if (i < 1 || i > d - 3) throw ValidationError("syzygy index must satisfy 1 <= i <= d-3");
    long dl = d;
    SplittingBounds out;
    out.lower = Rat(static_cast<long>(i) * (i + 1) + 2, dl * (dl - 1));
    out.upper = Rat((static_cast<long>(i) + 1) * (2 * dl - i - 2) - 2, dl * (dl - 1));
    out.lower *= Rat(g + dl - 1);
    out.upper *= Rat(g + dl - 1);
    out.lower.canonicalize();
    out.upper.canonicalize();
    return out;
}

SplittingBounds splitting_type_bounds(int i, const ScrollarProfile& p) {
    return splitting_type_bounds(i, p.degree(), p.genus());
}

Int betti_number(int i, int d) {
    if (i < 1 || i > d - 3) throw ValidationError("syzygy index must satisfy 1 <= i <= d-3");
    Int num = Int(d) * (d - 2 - i) * binomial(d - 2, i - 1);
    if (num % (i + 1) != 0) throw ConsistencyError("betti number is not integral");
    return num / (i + 1);
}

Partition splitting_partition(int i, int d) {
    if (i < 1 || i > d - 3) throw ValidationError("syzygy index must satisfy 1 <= i <= d-3");
    return lambda_chain(d, i + 1);
}

}  // namespace scrollar

#include "scrollar/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace scrollar {

namespace {

// Removes the border strip attached to cell (r,c) (hook length = strip size).
// Returns the remaining partition; height of the strip is the leg length.
Partition remove_border_strip(const Partition& p, int r, int c, int bottom_row) {
    std::vector<int> parts = p.parts();
    for (int rr = r; rr < bottom_row; ++rr)
        parts[static_cast<size_t>(rr)] = p[rr + 1] - 1;
    parts[static_cast<size_t>(bottom_row)] = c;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Int mn_recursive(const Partition& lambda, const Partition& e);

std::map<std::pair<std::vector<int>, std::vector<int>>, Int> g_mn_cache;
std::mutex g_mn_mutex;

Int mn_character_cached(const Partition& lambda, const Partition& e) {
    auto key = std::make_pair(lambda.parts(), e.parts());
    {
        std::lock_guard<std::mutex> lock(g_mn_mutex);
        auto it = g_mn_cache.find(key);
        if (it != g_mn_cache.end()) return it->second;
    }
    Int value = mn_recursive(lambda, e);
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    return g_mn_cache.emplace(std::move(key), std::move(value)).first->second;
}

Int mn_recursive(const Partition& lambda, const Partition& e) {
    if (lambda.empty()) return 1;
    int strip = e[0];  // peel the largest cycle
    std::vector<int> rest_parts(e.parts().begin() + 1, e.parts().end());
    Partition rest(rest_parts);

    Partition conj = lambda.conjugate();
    Int total = 0;
    for (int r = 0; r < lambda.rows(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            int arm = lambda[r] - c - 1;
            int leg = conj[c] - r - 1;
            if (arm + leg + 1 != strip) continue;
            Partition rem = remove_border_strip(lambda, r, c, conj[c] - 1);
            Int sub = mn_character_cached(rem, rest);
            if (leg % 2 == 0)
                total += sub;
            else
                total -= sub;
        }
    }
    return total;
}

}  // namespace

Int character(const Partition& lambda, const Partition& e) {
    if (lambda.sum() != e.sum())
        throw ValidationError("character: lambda and e must be partitions of the same d");
    return mn_character_cached(lambda, e);
}

CharacterTable::CharacterTable(int d) : d_(d), classes_(enumerate_partitions(d)) {
    class_sizes_.reserve(classes_.size());
    for (const auto& e : classes_) class_sizes_.push_back(class_size(e));
    values_.reserve(classes_.size());
    for (const auto& lambda : classes_) {
        std::vector<Int> row;
        row.reserve(classes_.size());
        for (const auto& e : classes_) row.push_back(character(lambda, e));
        values_.push_back(std::move(row));
    }
}

const CharacterTable& CharacterTable::of(int d) {
    if (d < 1) throw ValidationError("character table requires d >= 1");
    static std::map<int, std::unique_ptr<CharacterTable>> tables;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = tables.find(d);
    if (it == tables.end())
        it = tables.emplace(d, std::unique_ptr<CharacterTable>(new CharacterTable(d))).first;
    return *it->second;
}

int CharacterTable::class_index(const Partition& e) const {
    auto it = std::find(classes_.begin(), classes_.end(), e);
    if (it == classes_.end()) throw ValidationError("not a partition of " + std::to_string(d_));
    return static_cast<int>(it - classes_.begin());
}

const Int& CharacterTable::value(const Partition& lambda, const Partition& e) const {
    return value(class_index(lambda), class_index(e));
}

Int p_invariant(const Partition& lambda) {
    int d = lambda.sum();
    if (d <= 1) return 0;
    std::vector<int> transposition{2};
    transposition.insert(transposition.end(), static_cast<size_t>(d - 2), 1);
    Int diff = dimension(lambda) - character(lambda, Partition(transposition));
    if (diff % 2 != 0) throw ConsistencyError("p-invariant is not integral");
    return diff / 2;
}

VirtualCharacter::VirtualCharacter(int d, std::vector<Int> values)
    : d_(d), values_(std::move(values)) {
    if (values_.size() != CharacterTable::of(d).classes().size())
        throw ValidationError("virtual character has wrong number of class values");
}

VirtualCharacter VirtualCharacter::irreducible(const Partition& lambda) {
    const auto& table = CharacterTable::of(lambda.sum());
    int li = table.class_index(lambda);
    std::vector<Int> values;
    for (size_t e = 0; e < table.classes().size(); ++e)
        values.push_back(table.value(li, static_cast<int>(e)));
    return VirtualCharacter(lambda.sum(), std::move(values));
}

VirtualCharacter VirtualCharacter::trivial(int d) {
    return VirtualCharacter(d, std::vector<Int>(CharacterTable::of(d).classes().size(), 1));
}

const Int& VirtualCharacter::at(const Partition& e) const {
    return values_[static_cast<size_t>(CharacterTable::of(d_).class_index(e))];
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
    if (d_ != o.d_) throw ValidationError("degree mismatch");
    std::vector<Int> v = values_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
    return VirtualCharacter(d_, std::move(v));
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const {
    if (d_ != o.d_) throw ValidationError("degree mismatch");
    std::vector<Int> v = values_;
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.values_[i];
    return VirtualCharacter(d_, std::move(v));
}

VirtualCharacter VirtualCharacter::operator*(const VirtualCharacter& o) const {
    if (d_ != o.d_) throw ValidationError("degree mismatch");
    std::vector<Int> v = values_;
    for (size_t i = 0; i < v.size(); ++i) v[i] *= o.values_[i];
    return VirtualCharacter(d_, std::move(v));
}

Int mult(const VirtualCharacter& v, const VirtualCharacter& w) {
    if (v.degree() != w.degree()) throw ValidationError("degree mismatch");
    const auto& table = CharacterTable::of(v.degree());
    Int total = 0;
    for (size_t e = 0; e < table.classes().size(); ++e)
        total += table.size_of_class(static_cast<int>(e)) * v.at_class(static_cast<int>(e)) *
                 w.at_class(static_cast<int>(e));
    Int order = factorial(v.degree());
    if (total % order != 0)
        throw ConsistencyError("character scalar product is not integral");
    return total / order;
}

std::vector<Int> decompose(const VirtualCharacter& v) {
    const auto& table = CharacterTable::of(v.degree());
    std::vector<Int> out;
    out.reserve(table.classes().size());
    for (const auto& lambda : table.classes())
        out.push_back(mult(v, VirtualCharacter::irreducible(lambda)));
    return out;
}

VirtualCharacter symmetric_power(const VirtualCharacter& v, int k) {
    if (k < 2 || k > 4) throw ValidationError("symmetric_power supports k in {2,3,4}");
    const auto& table = CharacterTable::of(v.degree());
    std::vector<Int> out;
    for (const auto& e : table.classes()) {
        // power values chi(s^i) for this class
        std::vector<Int> pw(static_cast<size_t>(k) + 1);
        for (int i = 1; i <= k; ++i) pw[static_cast<size_t>(i)] = v.at(cycle_power_type(e, i));
        std::vector<Rat> h(static_cast<size_t>(k) + 1);
        h[0] = 1;
        for (int n = 1; n <= k; ++n) {
            Rat acc = 0;
            for (int i = 1; i <= n; ++i) acc += Rat(pw[static_cast<size_t>(i)]) * h[static_cast<size_t>(n - i)];
            h[static_cast<size_t>(n)] = acc / n;
        }
        out.push_back(to_integer(h[static_cast<size_t>(k)]));
    }
    return VirtualCharacter(v.degree(), std::move(out));
}

namespace {

std::vector<Partition> remove_one_cell(const Partition& p) {
    std::vector<Partition> out;
    for (int r = 0; r < p.rows(); ++r) {
        if (r + 1 < p.rows() && p[r] == p[r + 1]) continue;  // not a corner
        std::vector<int> parts = p.parts();
        if (--parts[static_cast<size_t>(r)] == 0) parts.pop_back();
        out.push_back(Partition(std::move(parts)));
    }
    return out;
}

std::vector<Partition> add_one_cell(const Partition& p, int d_target) {
    std::vector<Partition> out;
    for (int r = 0; r <= p.rows(); ++r) {
        std::vector<int> parts = p.parts();
        if (r == p.rows())
            parts.push_back(1);
        else {
            if (r > 0 && parts[static_cast<size_t>(r)] == parts[static_cast<size_t>(r - 1)]) continue;
            ++parts[static_cast<size_t>(r)];
        }
        Partition q(std::move(parts));
        if (q.sum() == d_target) out.push_back(std::move(q));
    }
    return out;
}

std::vector<Partition> remove_domino(const Partition& p, bool horizontal) {
    std::vector<Partition> out;
    if (horizontal) {
        for (int r = 0; r < p.rows(); ++r) {
            if (p[r] < 2) continue;
            int below = r + 1 < p.rows() ? p[r + 1] : 0;
            if (p[r] - 2 < below) continue;
            std::vector<int> parts = p.parts();
            parts[static_cast<size_t>(r)] -= 2;
            if (parts[static_cast<size_t>(r)] == 0) parts.pop_back();
            out.push_back(Partition(std::move(parts)));
        }
    } else {
        for (int r = 0; r + 1 < p.rows(); ++r) {
            if (p[r] != p[r + 1]) continue;  // both cells must be row-terminal in the same column
            int below = r + 2 < p.rows() ? p[r + 2] : 0;
            if (p[r] - 1 < below) continue;
            std::vector<int> parts = p.parts();
            --parts[static_cast<size_t>(r)];
            --parts[static_cast<size_t>(r + 1)];
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            out.push_back(Partition(std::move(parts)));
        }
    }
    return out;
}

long count_matches(const std::vector<Partition>& xs, const Partition& target) {
    return static_cast<long>(std::count(xs.begin(), xs.end(), target));
}

}  // namespace

TensorRuleCounts tensor_rule_counts(const Partition& mu, const Partition& lambda) {
    if (mu.sum() != lambda.sum()) throw ValidationError("tensor_rule_counts: size mismatch");
    int d = mu.sum();
    TensorRuleCounts out;

    // c: remove one cell from mu, add one back to reach lambda
    for (const auto& nu : remove_one_cell(mu))
        out.c += count_matches(add_one_cell(nu, d), lambda);

    // d2: ordered remove-remove then add-add paths through partitions of d-2
    std::map<Partition, long> down_paths, up_paths;
    for (const auto& nu1 : remove_one_cell(mu))
        for (const auto& nu2 : remove_one_cell(nu1)) ++down_paths[nu2];
    {
        // ordered additions nu -> lambda = ordered removals lambda -> nu
        for (const auto& nu1 : remove_one_cell(lambda))
            for (const auto& nu2 : remove_one_cell(nu1)) ++up_paths[nu2];
    }
    for (const auto& [nu, cnt] : down_paths) {
        auto it = up_paths.find(nu);
        if (it != up_paths.end()) out.d2 += cnt * it->second;
    }

    // e2 / e2x: domino moves
    auto h_out = remove_domino(mu, true), v_out = remove_domino(mu, false);
    auto h_in = remove_domino(lambda, true), v_in = remove_domino(lambda, false);
    for (const auto& nu : h_out) {
        out.e2 += count_matches(h_in, nu);
        out.e2x += count_matches(v_in, nu);
    }
    for (const auto& nu : v_out) {
        out.e2 += count_matches(v_in, nu);
        out.e2x += count_matches(h_in, nu);
    }
    return out;
}

Partition lambda_chain(int d, int i) {
    if (i == 0) return Partition({d});
    if (i == 1) return hook_partition(d, 1);
    if (i == d) return hook_partition(d, d - 1);
    if (i < 2 || i > d - 2) throw ValidationError("lambda_chain index not defined");
    std::vector<int> parts{d - i, 2};
    parts.insert(parts.end(), static_cast<size_t>(i - 2), 1);
    return Partition(std::move(parts));
}

}  // namespace scrollar

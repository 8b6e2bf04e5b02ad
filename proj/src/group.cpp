#include "scrollar/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace scrollar {

namespace {

constexpr int kClosureDegreeCap = 9;

std::vector<int> min_coset_member(const Perm& s, const PermSubgroup& h) {
    std::vector<int> best;
    for (const auto& e : h.elements()) {
        std::vector<int> img = (s * e).images();
        if (best.empty() || img < best) best = std::move(img);
    }
    return best;
}

}  // namespace

PermSubgroup::PermSubgroup(int d, std::vector<Perm> gens, std::vector<Perm> elements)
    : d_(d), gens_(std::move(gens)), elements_(std::move(elements)) {}

PermSubgroup PermSubgroup::close(int d, std::vector<Perm> generators) {
    if (d < 1) throw ValidationError("group degree must be positive");
    if (d > kClosureDegreeCap)
        throw ResourceError("group closure capped at degree " + std::to_string(kClosureDegreeCap));
    for (const auto& g : generators)
        if (g.degree() != d) throw ValidationError("generator degree mismatch");

    std::set<Perm> seen;
    std::deque<Perm> queue;
    seen.insert(Perm(d));
    queue.push_back(Perm(d));
    while (!queue.empty()) {
        Perm cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            Perm next = g * cur;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<Perm> elements(seen.begin(), seen.end());
    return PermSubgroup(d, std::move(generators), std::move(elements));
}

PermSubgroup PermSubgroup::symmetric(int d) {
    return close(d, adjacent_transpositions(d));
}

PermSubgroup PermSubgroup::alternating(int d) {
    std::vector<Perm> gens;
    for (int i = 0; i + 2 < d; ++i)
        gens.push_back(Perm::from_cycles(d, {{i + 1, i + 2, i + 3}}));
    if (gens.empty()) gens.push_back(Perm(d));
    return close(d, std::move(gens));
}

PermSubgroup PermSubgroup::trivial(int d) { return close(d, {Perm(d)}); }

PermSubgroup PermSubgroup::young(const Partition& lambda) {
    int d = lambda.sum();
    std::vector<Perm> gens;
    int offset = 0;
    for (int block : lambda.parts()) {
        for (int i = 0; i + 1 < block; ++i)
            gens.push_back(Perm::from_cycles(d, {{offset + i + 1, offset + i + 2}}));
        offset += block;
    }
    if (gens.empty()) gens.push_back(Perm(d));
    return close(d, std::move(gens));
}

bool PermSubgroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermSubgroup::is_transitive() const {
    std::vector<char> reached(static_cast<size_t>(d_), 0);
    reached[0] = 1;
    std::deque<int> queue{0};
    int count = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (const auto& g : gens_) {
            int y = g.apply(x);
            if (!reached[static_cast<size_t>(y)]) {
                reached[static_cast<size_t>(y)] = 1;
                ++count;
                queue.push_back(y);
            }
        }
    }
    return count == d_;
}

long PermSubgroup::transposition_count() const {
    if (d_ < 2) return 0;
    std::vector<int> tparts{2};
    tparts.insert(tparts.end(), static_cast<size_t>(d_ - 2), 1);
    Partition t(tparts);
    long count = 0;
    for (const auto& e : elements_)
        if (e.cycle_type() == t) ++count;
    return count;
}

CosetAction::CosetAction(PermSubgroup h) : h_(std::move(h)) {
    // breadth-first over cosets: S_d is generated by adjacent transpositions
    auto sgens = adjacent_transpositions(h_.degree());
    Perm id(h_.degree());
    std::vector<int> key = min_coset_member(id, h_);
    index_.emplace(key, 0);
    reps_.push_back(Perm(key));
    for (size_t i = 0; i < reps_.size(); ++i) {
        for (const auto& g : sgens) {
            Perm moved = g * reps_[i];
            std::vector<int> k = min_coset_member(moved, h_);
            if (index_.emplace(k, static_cast<int>(reps_.size())).second)
                reps_.push_back(Perm(k));
        }
    }
}

int CosetAction::coset_of(const Perm& s) const {
    auto it = index_.find(min_coset_member(s, h_));
    if (it == index_.end()) throw ConsistencyError("coset lookup failed");
    return it->second;
}

int CosetAction::act(const Perm& s, int coset) const {
    return coset_of(s * reps_[static_cast<size_t>(coset)]);
}

long CosetAction::fixed_cosets(const Perm& s) const {
    // sH fixed by rho iff s^{-1} rho s in H
    long fixed = 0;
    for (const auto& rep : reps_)
        if (h_.contains(rep.inverse() * s * rep)) ++fixed;
    return fixed;
}

VirtualCharacter CosetAction::permutation_character() const {
    const auto& table = CharacterTable::of(h_.degree());
    std::vector<Int> values;
    for (const auto& e : table.classes())
        values.push_back(fixed_cosets(representative_of_type(e)));
    return VirtualCharacter(h_.degree(), std::move(values));
}

Partition CosetAction::orbit_pattern(const Perm& rho) const {
    std::vector<char> seen(reps_.size(), 0);
    std::vector<int> sizes;
    for (size_t i = 0; i < reps_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        int j = static_cast<int>(i);
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            ++len;
            j = act(rho, j);
        }
        sizes.push_back(len);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return Partition(std::move(sizes));
}

VirtualCharacter permutation_character(const PermSubgroup& h) {
    return CosetAction(h).permutation_character();
}

Int p_invariant(const PermSubgroup& h) {
    int d = h.degree();
    if (d < 2) return 0;
    VirtualCharacter ind = permutation_character(h);
    std::vector<int> tparts{2};
    tparts.insert(tparts.end(), static_cast<size_t>(d - 2), 1);
    Int diff = ind.dim() - ind.at(Partition(tparts));
    if (diff % 2 != 0) throw ConsistencyError("p(H) is not integral");
    Int via_character = diff / 2;

    Int outside = binomial(d, 2) - h.transposition_count();
    Int via_count = factorial(d - 2) * outside;
    if (via_count % h.order() != 0 || via_count / h.order() != via_character)
        throw ConsistencyError("p(H) formulas disagree for H of order " +
                               std::to_string(h.order()));
    return via_character;
}

Int product_size(const PermSubgroup& g, const PermSubgroup& h) {
    if (g.degree() != h.degree()) throw ValidationError("degree mismatch");
    std::vector<Perm> common;
    std::set_intersection(g.elements().begin(), g.elements().end(), h.elements().begin(),
                          h.elements().end(), std::back_inserter(common));
    return Int(g.order()) * Int(h.order()) / Int(static_cast<long>(common.size()));
}

bool product_is_full(const PermSubgroup& g, const PermSubgroup& h) {
    return product_size(g, h) == factorial(g.degree());
}

DoubleCosets double_cosets(const PermSubgroup& h, const PermSubgroup& g) {
    if (h.degree() != g.degree()) throw ValidationError("degree mismatch");
    int d = h.degree();
    long n = 1;
    for (int i = 2; i <= d; ++i) n *= i;
    std::vector<char> visited(static_cast<size_t>(n), 0);

    DoubleCosets out;
    for (long r = 0; r < n; ++r) {
        if (visited[static_cast<size_t>(r)]) continue;
        Perm seed = perm_from_lehmer_rank(d, r);
        std::deque<Perm> queue{seed};
        visited[static_cast<size_t>(r)] = 1;
        long size = 0;
        while (!queue.empty()) {
            Perm cur = queue.front();
            queue.pop_front();
            ++size;
            for (const auto& hg : h.generators()) {
                Perm next = hg * cur;
                long rank = lehmer_rank(next);
                if (!visited[static_cast<size_t>(rank)]) {
                    visited[static_cast<size_t>(rank)] = 1;
                    queue.push_back(std::move(next));
                }
            }
            for (const auto& gg : g.generators()) {
                Perm next = cur * gg;
                long rank = lehmer_rank(next);
                if (!visited[static_cast<size_t>(rank)]) {
                    visited[static_cast<size_t>(rank)] = 1;
                    queue.push_back(std::move(next));
                }
            }
        }
        if (size % h.order() != 0)
            throw ConsistencyError("double coset size not divisible by |H|");
        out.representatives.push_back(std::move(seed));
        out.sizes.push_back(size);
        out.component_degrees.push_back(size / h.order());
    }
    return out;
}

std::vector<std::vector<int>> orbit_pattern_by_component(const CosetAction& cosets,
                                                         const DoubleCosets& dc,
                                                         const PermSubgroup& g, const Perm& rho) {
    // fill rank -> double-coset-index by flooding each H s G once
    int d = g.degree();
    long n = 1;
    for (int i = 2; i <= d; ++i) n *= i;
    std::vector<int> component_of(static_cast<size_t>(n), -1);
    const PermSubgroup& h = cosets.subgroup();
    for (size_t c = 0; c < dc.representatives.size(); ++c) {
        std::deque<Perm> queue{dc.representatives[c]};
        component_of[static_cast<size_t>(lehmer_rank(dc.representatives[c]))] =
            static_cast<int>(c);
        while (!queue.empty()) {
            Perm cur = queue.front();
            queue.pop_front();
            for (const auto& hg : h.generators()) {
                Perm next = hg * cur;
                long rank = lehmer_rank(next);
                if (component_of[static_cast<size_t>(rank)] < 0) {
                    component_of[static_cast<size_t>(rank)] = static_cast<int>(c);
                    queue.push_back(std::move(next));
                }
            }
            for (const auto& gg : g.generators()) {
                Perm next = cur * gg;
                long rank = lehmer_rank(next);
                if (component_of[static_cast<size_t>(rank)] < 0) {
                    component_of[static_cast<size_t>(rank)] = static_cast<int>(c);
                    queue.push_back(std::move(next));
                }
            }
        }
    }

    // Our coset space is S_d/H while components live on H\S_d/G, so the coset
    // sH pairs with the double coset H s^{-1} G: inversion carries one side to
    // the other and preserves <rho>-orbit sizes.
    std::vector<std::vector<int>> orbit_sizes(dc.representatives.size());
    std::vector<char> seen(static_cast<size_t>(cosets.index()), 0);
    for (int i = 0; i < cosets.index(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            ++len;
            j = cosets.act(rho, j);
        }
        int comp = component_of[static_cast<size_t>(
            lehmer_rank(cosets.representatives()[static_cast<size_t>(i)].inverse()))];
        orbit_sizes[static_cast<size_t>(comp)].push_back(len);
    }
    for (auto& v : orbit_sizes) std::sort(v.rbegin(), v.rend());
    return orbit_sizes;
}

namespace {

PermSubgroup registry_fixed(int d, const std::string& name) {
    auto mk = [d](std::initializer_list<const char*> cycles) {
        std::vector<Perm> gens;
        for (const char* c : cycles) gens.push_back(Perm::parse(d, c));
        return PermSubgroup::close(d, std::move(gens));
    };
    if (d == 4 && name == "D4") return mk({"(1 2 3 4)", "(1 3)"});
    if (d == 4 && name == "C4") return mk({"(1 2 3 4)"});
    if (d == 4 && name == "V4") return mk({"(1 2)(3 4)", "(1 3)(2 4)"});
    if (d == 5 && name == "AGL1F5") return mk({"(1 2 3 4 5)", "(1 2 4 3)"});
    if (d == 5 && name == "D5") return mk({"(1 2 3 4 5)", "(2 5)(3 4)"});
    if (d == 5 && name == "C5") return mk({"(1 2 3 4 5)"});
    if (d == 6 && name == "S5prime") return mk({"(1 2 3 4)", "(1 5 6 2)"});
    if (d == 6 && name == "F36") return mk({"(2 4 6)", "(1 5)(2 4)", "(1 4 5 2)(3 6)"});
    if (d == 6 && name == "F72") return mk({"(2 4 6)", "(2 4)", "(1 4)(2 5)(3 6)"});
    if (d == 6 && name == "C6") return mk({"(1 2 3 4 5 6)"});
    if (d == 6 && name == "S3reg") return mk({"(1 2 3)(4 6 5)", "(1 4)(2 5)(3 6)"});
    if (d == 6 && name == "D6") return mk({"(1 2 3 4 5 6)", "(2 6)(3 5)"});
    if (d == 6 && name == "A4on6") return mk({"(1 2)(3 4)", "(1 2)(5 6)", "(1 3 5)(2 4 6)"});
    if (d == 6 && name == "F18") return mk({"(1 3 5)", "(2 4 6)", "(1 4)(2 5)(3 6)"});
    if (d == 6 && name == "F18x2") return mk({"(1 3 5)", "(2 4 6)", "(1 3)(2 4)", "(1 4)(2 5)(3 6)"});
    if (d == 6 && name == "C2wrC3") return mk({"(1 2)", "(3 4)", "(5 6)", "(1 3 5)(2 4 6)"});
    if (d == 6 && name == "C2wrS3") return mk({"(1 2)", "(3 4)", "(5 6)", "(1 3 5)(2 4 6)", "(1 3)(2 4)"});
    throw ValidationError("unknown subgroup name '" + name + "' for degree " + std::to_string(d));
}

/// Faithful transitive image of `g` acting on cosets of `point` inside g.
/// Used for the degree-6 catalog entries that arise as coset actions.
PermSubgroup coset_image(const PermSubgroup& g, const std::vector<Perm>& point_gens) {
    PermSubgroup point = PermSubgroup::close(g.degree(), point_gens);
    // enumerate cosets of point inside g
    std::vector<Perm> reps;
    std::map<std::vector<int>, int> index;
    auto key_of = [&point](const Perm& s) {
        std::vector<int> best;
        for (const auto& e : point.elements()) {
            std::vector<int> img = (s * e).images();
            if (best.empty() || img < best) best = std::move(img);
        }
        return best;
    };
    index.emplace(key_of(Perm(g.degree())), 0);
    reps.push_back(Perm(g.degree()));
    for (size_t i = 0; i < reps.size(); ++i)
        for (const auto& gg : g.generators()) {
            Perm moved = gg * reps[i];
            auto k = key_of(moved);
            if (index.emplace(k, static_cast<int>(reps.size())).second) reps.push_back(moved);
        }
    int n = static_cast<int>(reps.size());
    std::vector<Perm> image_gens;
    for (const auto& gg : g.generators()) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c)
            img[static_cast<size_t>(c)] = index.at(key_of(gg * reps[static_cast<size_t>(c)]));
        image_gens.push_back(Perm(std::move(img)));
    }
    return PermSubgroup::close(n, std::move(image_gens));
}

}  // namespace

PermSubgroup subgroup_by_name(int d, const std::string& name) {
    if (name == "Sd") return PermSubgroup::symmetric(d);
    if (name == "Ad") return PermSubgroup::alternating(d);
    if (name == "trivial") return PermSubgroup::trivial(d);
    if (name.rfind("Young:", 0) == 0) {
        Partition lambda = Partition::parse(name.substr(6));
        if (lambda.sum() != d) throw ValidationError("Young partition must sum to d");
        return PermSubgroup::young(lambda);
    }
    if (name == "Sd-1") return PermSubgroup::young(Partition({d - 1, 1}));
    if (d == 6 && name == "S4on6a") {
        // S4 on cosets of the cyclic <(1234)>
        return coset_image(PermSubgroup::symmetric(4), {Perm::parse(4, "(1 2 3 4)")});
    }
    if (d == 6 && name == "S4on6b") {
        // S4 on cosets of <(12),(34)>
        return coset_image(PermSubgroup::symmetric(4),
                           {Perm::parse(4, "(1 2)"), Perm::parse(4, "(3 4)")});
    }
    if (d == 6 && name == "A5on6") {
        // A5 on cosets of a dihedral subgroup of order 10
        return coset_image(PermSubgroup::alternating(5),
                           {Perm::parse(5, "(1 2 3 4 5)"), Perm::parse(5, "(2 5)(3 4)")});
    }
    return registry_fixed(d, name);
}

std::vector<std::pair<std::string, PermSubgroup>> transitive_registry(int d) {
    std::vector<std::string> names;
    if (d == 4)
        names = {"C4", "V4", "D4", "Ad", "Sd"};
    else if (d == 5)
        names = {"C5", "D5", "AGL1F5", "Ad", "Sd"};
    else if (d == 6)
        names = {"C6",     "S3reg",  "D6",     "A4on6", "F18",   "C2wrC3",
                 "S4on6a", "S4on6b", "F18x2",  "F36",   "C2wrS3", "A5on6",
                 "F72",    "S5prime", "Ad",    "Sd"};
    else
        throw ValidationError("transitive registry only covers d in {4,5,6}");
    std::vector<std::pair<std::string, PermSubgroup>> out;
    for (const auto& n : names) out.emplace_back(n, subgroup_by_name(d, n));
    return out;
}

}  // namespace scrollar

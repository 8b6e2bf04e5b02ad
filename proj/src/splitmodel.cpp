#include "scrollar/splitmodel.hpp"

#include <algorithm>

#include "scrollar/characters.hpp"

namespace scrollar {

long Puiseux::min_exponent() const {
    if (terms_.empty()) throw ConsistencyError("zero series has no valuation");
    return terms_.begin()->first;
}

void Puiseux::add_term(long u_exp, const Cyclo& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(u_exp);
    if (it == terms_.end()) {
        terms_.emplace(u_exp, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

Puiseux Puiseux::operator+(const Puiseux& o) const {
    Puiseux out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

Puiseux Puiseux::operator-(const Puiseux& o) const {
    Puiseux out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c * Rat(-1));
    return out;
}

Puiseux Puiseux::operator*(const Puiseux& o) const {
    Puiseux out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) out.add_term(ka + kb, ca * cb);
    return out;
}

Puiseux Puiseux::scaled(const Rat& s) const {
    Puiseux out;
    if (s == 0) return out;
    for (const auto& [k, c] : terms_) out.add_term(k, c * s);
    return out;
}

SplitModel::SplitModel(int e, bool allow_large) : e_(e), field_(&CyclotomicField::of(e)) {
    if (e < 1) throw ValidationError("model order must be positive");
    if (e > 5 && !allow_large)
        throw ResourceError("split model capped at e = 5 (" + std::to_string(factorial(5).get_si()) +
                            " coordinates); pass the override to go higher");
    long n = 1;
    for (int i = 2; i <= e; ++i) n *= i;
    perms_.reserve(static_cast<size_t>(n));
    for (long r = 0; r < n; ++r) perms_.push_back(perm_from_lehmer_rank(e, r));

    // canonical monomial exponents 0 <= l_i < i+1, enumerated with the last
    // index fastest so the identity monomial comes first
    std::vector<int> cur(static_cast<size_t>(e), 0);
    while (true) {
        exps_.push_back(cur);
        int pos = e - 1;
        while (pos >= 0) {
            if (++cur[static_cast<size_t>(pos)] <= pos) break;
            cur[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    if (static_cast<long>(exps_.size()) != n)
        throw ConsistencyError("monomial count does not match e!");
}

SplitModel::Element SplitModel::one() const {
    Element x = zero();
    for (auto& coord : x) coord.add_term(0, Cyclo::rational(*field_, 1));
    return x;
}

SplitModel::Element SplitModel::generator(int i) const {
    return monomial([&] {
        std::vector<int> exps(static_cast<size_t>(e_), 0);
        exps[static_cast<size_t>(i)] = 1;
        return exps;
    }());
}

SplitModel::Element SplitModel::monomial(const std::vector<int>& exps) const {
    if (static_cast<int>(exps.size()) != e_) throw ValidationError("exponent vector length != e");
    Element x = zero();
    long total = 0;
    for (int v : exps) total += v;
    for (size_t p = 0; p < perms_.size(); ++p) {
        long zexp = 0;
        for (int i = 0; i < e_; ++i)
            zexp += static_cast<long>(perms_[p].apply(i) + 1) * exps[static_cast<size_t>(i)];
        x[p].add_term(total, Cyclo::zeta_power(*field_, zexp));
    }
    return x;
}

SplitModel::Element SplitModel::add(const Element& a, const Element& b) const {
    Element out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

SplitModel::Element SplitModel::sub(const Element& a, const Element& b) const {
    Element out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

SplitModel::Element SplitModel::mul(const Element& a, const Element& b) const {
    Element out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

SplitModel::Element SplitModel::scale(const Element& a, const Rat& s) const {
    Element out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i].scaled(s);
    return out;
}

SplitModel::Element SplitModel::shift_t(const Element& a, long k) const {
    Element out(a.size());
    Puiseux tk;
    tk.add_term(k * e_, Cyclo::rational(*field_, 1));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * tk;
    return out;
}

bool SplitModel::equal(const Element& a, const Element& b) const {
    return a == b;
}

SplitModel::Element SplitModel::act(const Perm& sigma, const Element& x) const {
    Element out(x.size());
    for (size_t p = 0; p < perms_.size(); ++p)
        out[p] = x[static_cast<size_t>(lehmer_rank(perms_[p] * sigma))];
    return out;
}

Puiseux SplitModel::trace(const Element& x) const {
    Puiseux total;
    for (const auto& coord : x) total = total + coord;
    return total;
}

QPoly SplitModel::trace_poly(const Element& x) const {
    Puiseux tr = trace(x);
    std::vector<Rat> coeffs;
    for (const auto& [uexp, c] : tr.terms()) {
        if (uexp % e_ != 0 || uexp < 0)
            throw ConsistencyError("trace has a fractional or negative t-power");
        if (!c.is_rational()) throw ConsistencyError("trace coefficient is not rational");
        long k = uexp / e_;
        if (static_cast<long>(coeffs.size()) <= k) coeffs.resize(static_cast<size_t>(k) + 1, Rat(0));
        coeffs[static_cast<size_t>(k)] = c.rational_part();
    }
    return QPoly(std::move(coeffs));
}

Cyclo SplitModel::chi_rat(const Partition& lambda, const Perm& sigma) const {
    Int v = character(lambda, sigma.cycle_type());
    return Cyclo::rational(*field_, Rat(v));
}

SplitModel::Element SplitModel::isotypic_project(const Partition& lambda, const Element& x) const {
    if (lambda.sum() != e_) throw ValidationError("partition must have size e");
    Element acc = zero();
    for (const auto& sigma : perms_) {
        // chi(sigma^{-1}) = chi(sigma) for symmetric groups
        Element moved = act(sigma, x);
        Cyclo c = chi_rat(lambda, sigma);
        for (size_t p = 0; p < acc.size(); ++p) {
            Puiseux scaledp;
            for (const auto& [k, coef] : moved[p].terms()) scaledp.add_term(k, coef * c);
            acc[p] = acc[p] + scaledp;
        }
    }
    Rat factor = Rat(dimension(lambda)) / Rat(factorial(e_));
    factor.canonicalize();
    return scale(acc, factor);
}

std::vector<SplitModel::Element> SplitModel::monomial_basis() const {
    std::vector<Element> out;
    out.reserve(exps_.size());
    for (const auto& exps : exps_) out.push_back(monomial(exps));
    return out;
}

std::vector<SplitModel::Element> SplitModel::infinity_basis() const {
    std::vector<Element> out;
    out.reserve(exps_.size());
    for (const auto& exps : exps_) {
        std::vector<int> neg(exps.size());
        for (size_t i = 0; i < exps.size(); ++i) neg[i] = -exps[i];
        out.push_back(monomial(neg));
    }
    return out;
}

std::optional<std::vector<QPoly>> SplitModel::flatten(const Element& x, Side side) const {
    int deg = field_->degree();
    size_t slots = perms_.size() * static_cast<size_t>(e_) * static_cast<size_t>(deg);
    std::vector<std::vector<Rat>> acc(slots);
    long maxlen = 0;
    for (size_t p = 0; p < x.size(); ++p) {
        for (const auto& [uexp, c] : x[p].terms()) {
            long r, q;
            if (side == Side::zero) {
                if (uexp < 0) return std::nullopt;
                r = uexp % e_;
                q = uexp / e_;
            } else {
                if (uexp > 0) return std::nullopt;
                r = ((-uexp) % e_);
                q = (-uexp) / e_;  // power of 1/t after peeling u^{-r}
            }
            for (int m = 0; m < deg; ++m) {
                const Rat& coeff = c.coeffs()[static_cast<size_t>(m)];
                if (coeff == 0) continue;
                size_t slot = (p * static_cast<size_t>(e_) + static_cast<size_t>(r)) *
                                  static_cast<size_t>(deg) +
                              static_cast<size_t>(m);
                if (static_cast<long>(acc[slot].size()) <= q)
                    acc[slot].resize(static_cast<size_t>(q) + 1, Rat(0));
                acc[slot][static_cast<size_t>(q)] = coeff;
                maxlen = std::max(maxlen, q + 1);
            }
        }
    }
    std::vector<QPoly> out;
    out.reserve(slots);
    for (auto& v : acc) out.push_back(QPoly(std::move(v)));
    return out;
}

namespace {

// rows = flattened slots, columns = elements
QPolyMatrix columns_to_matrix(const std::vector<std::vector<QPoly>>& cols) {
    size_t rows = cols.empty() ? 0 : cols[0].size();
    QPolyMatrix m(rows, std::vector<QPoly>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < rows; ++r) m[r][c] = cols[c][r];
    return m;
}

}  // namespace

bool SplitModel::in_lattice(const std::vector<Element>& basis, const Element& x, Side side) const {
    auto fx = flatten(x, side);
    if (!fx) return false;
    std::vector<std::vector<QPoly>> cols;
    for (const auto& b : basis) {
        auto fb = flatten(b, side);
        if (!fb) throw ValidationError("lattice basis element lies outside its own side");
        cols.push_back(std::move(*fb));
    }
    cols.push_back(std::move(*fx));
    auto kernel = kernel_basis(columns_to_matrix(cols));
    if (kernel.size() > 1) throw ConsistencyError("lattice basis is linearly dependent");
    if (kernel.empty()) return false;  // x outside the rational span
    const QPoly& last = kernel[0].back();
    return !last.is_zero() && last.degree() == 0;
}

std::optional<LaurentMatrix> SplitModel::transition_matrix(
    const std::vector<Element>& from_basis, const std::vector<Element>& to_basis) const {
    // Solve from_basis * Y = to_basis over Q(t) column by column via the
    // augmented-kernel trick; entries must come out as Laurent polynomials.
    size_t n = from_basis.size();
    if (to_basis.size() != n) throw ValidationError("bases have different sizes");
    std::vector<std::vector<QPoly>> cols;
    for (const auto& b : from_basis) {
        auto fb = flatten(b, Side::zero);
        if (!fb) throw ValidationError("transition requires zero-side elements; shift by t^k first");
        cols.push_back(std::move(*fb));
    }

    std::vector<std::vector<std::pair<QPoly, long>>> entries(n);  // (num, t^-shift)
    long max_shift = 0;
    for (size_t j = 0; j < n; ++j) {
        auto fx = flatten(to_basis[j], Side::zero);
        if (!fx) throw ValidationError("transition requires zero-side elements; shift by t^k first");
        auto aug = cols;
        aug.push_back(std::move(*fx));
        auto kernel = kernel_basis(columns_to_matrix(aug));
        if (kernel.size() != 1) return std::nullopt;
        const QPoly& c = kernel[0].back();
        if (c.is_zero()) return std::nullopt;
        if (c.valuation() != c.degree()) return std::nullopt;  // denominator must be a t-power
        Rat lead = c.leading();
        long shift = c.degree();
        max_shift = std::max(max_shift, shift);
        entries[j].reserve(n);
        for (size_t i = 0; i < n; ++i) {
            // coordinate = -kernel_i / c
            QPoly num = kernel[0][i] * (Rat(-1) / lead);
            entries[j].emplace_back(std::move(num), shift);
        }
    }
    LaurentMatrix out;
    out.shift = max_shift;
    out.poly.assign(n, std::vector<QPoly>(n));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            auto& [num, shift] = entries[j][i];
            out.poly[i][j] = num * QPoly::monomial(1, max_shift - shift);
        }
    return out;
}

SplitModel::Lattice SplitModel::isotypic_lattice(const Partition& lambda) const {
    auto monomials = monomial_basis();
    size_t n = monomials.size();

    // The projector preserves the total u-degree, so the kernel system splits
    // into independent blocks indexed by the u-degree residue mod e. Solve
    // each block separately (dropping its all-zero rows) and reassemble.
    std::vector<long> residue(n, 0);
    for (size_t j = 0; j < n; ++j) {
        long total = 0;
        for (int v : exps_[j]) total += v;
        residue[j] = total % e_;
    }

    std::vector<std::vector<QPoly>> combos;  // kernel vectors over all n slots
    for (long r = 0; r < e_; ++r) {
        std::vector<size_t> block;
        for (size_t j = 0; j < n; ++j)
            if (residue[j] == r) block.push_back(j);
        if (block.empty()) continue;

        std::vector<std::vector<QPoly>> cols;
        cols.reserve(block.size());
        for (size_t j : block) {
            Element diff = sub(monomials[j], isotypic_project(lambda, monomials[j]));
            auto flat = flatten(diff, Side::zero);
            if (!flat) throw ConsistencyError("projected monomial left the zero side");
            cols.push_back(std::move(*flat));
        }
        // drop rows that vanish across the whole block
        size_t slot_count = cols[0].size();
        QPolyMatrix m;
        for (size_t row = 0; row < slot_count; ++row) {
            bool any = false;
            for (const auto& c : cols) any = any || !c[row].is_zero();
            if (!any) continue;
            std::vector<QPoly> mrow;
            mrow.reserve(cols.size());
            for (const auto& c : cols) mrow.push_back(c[row]);
            m.push_back(std::move(mrow));
        }
        if (m.empty()) m.assign(1, std::vector<QPoly>(cols.size(), QPoly()));
        for (const auto& k : kernel_basis(m)) {
            std::vector<QPoly> full(n);
            for (size_t bi = 0; bi < block.size(); ++bi) full[block[bi]] = k[bi];
            combos.push_back(std::move(full));
        }
    }

    Int expected = dimension(lambda) * dimension(lambda);
    if (Int(static_cast<long>(combos.size())) != expected)
        throw ConsistencyError("isotypic lattice rank defect: got " +
                               std::to_string(combos.size()));
    Lattice out;
    for (const auto& combo : combos) {
        Element v = zero();
        for (size_t j = 0; j < combo.size(); ++j) {
            if (combo[j].is_zero()) continue;
            for (long k = 0; k <= combo[j].degree(); ++k) {
                const Rat& ck = combo[j].coeff(k);
                if (ck == 0) continue;
                v = add(v, shift_t(scale(monomials[j], ck), k));
            }
        }
        out.elements.push_back(std::move(v));
        out.monomial_coords.push_back(combo);
    }
    return out;
}

long SplitModel::gram_valuation(const std::vector<Element>& basis) const {
    size_t n = basis.size();
    QPolyMatrix gram(n, std::vector<QPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            QPoly tr = trace_poly(mul(basis[i], basis[j]));
            gram[i][j] = tr;
            gram[j][i] = std::move(tr);
        }
    QPoly det = determinant(gram);
    if (det.is_zero()) throw ConsistencyError("degenerate trace pairing on the lattice");
    return det.valuation();
}

long SplitModel::full_gram_valuation() const {
    auto monomials = monomial_basis();
    size_t n = monomials.size();
    // every pairing trace is an integer times a single t-power with exponent
    // (|u_i| + |u_j|)/e, so the determinant factors as a t-power times an
    // integer determinant
    std::vector<long> udeg(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (int v : exps_[i]) udeg[i] += v;
    std::vector<std::vector<Rat>> c(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Puiseux tr = trace(mul(monomials[i], monomials[j]));
            if (tr.is_zero()) continue;
            if (tr.terms().size() != 1)
                throw ConsistencyError("monomial pairing trace is not a monomial");
            auto [uexp, coef] = *tr.terms().begin();
            if (uexp != udeg[i] + udeg[j] || uexp % e_ != 0)
                throw ConsistencyError("monomial pairing trace has the wrong exponent");
            c[i][j] = coef.rational_part();
            c[j][i] = c[i][j];
        }
    Rat det = determinant(std::move(c));
    if (det == 0) throw ConsistencyError("degenerate trace pairing on the full lattice");
    long total = 0;
    for (size_t i = 0; i < n; ++i) total += 2 * udeg[i];
    if (total % e_ != 0) throw ConsistencyError("full pairing exponent is fractional");
    return total / e_;
}

}  // namespace scrollar

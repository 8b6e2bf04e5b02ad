#include "scrollar/specht.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace scrollar {

namespace {

RatMatrix identity_matrix(long n) {
    RatMatrix m(static_cast<size_t>(n), RatVector(static_cast<size_t>(n), Rat(0)));
    for (long i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMatrix out(n, RatVector(m, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) {
                if (b[l][j] == 0) continue;
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    for (auto& row : out)
        for (auto& x : row) x.canonicalize();
    return out;
}

RatVector matvec(const RatMatrix& a, const RatVector& v) {
    RatVector out(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < v.size(); ++j) {
            if (a[i][j] == 0 || v[j] == 0) continue;
            out[i] += a[i][j] * v[j];
        }
        out[i].canonicalize();
    }
    return out;
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RatMatrix& m) {
    std::vector<size_t> pivots;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) {
            m[r][j] *= inv;
            m[r][j].canonicalize();
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of the right kernel of m.
std::vector<RatVector> rational_kernel(RatMatrix m) {
    size_t cols = m.empty() ? 0 : m[0].size();
    auto pivots = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (size_t c : pivots) is_pivot[c] = 1;
    std::vector<RatVector> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(cols, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Rep specht_rep(const Partition& lambda, int degree_bound) {
    int d = lambda.sum();
    if (d > degree_bound)
        throw ResourceError("Specht matrices capped at degree " + std::to_string(degree_bound));
    auto tableaux = standard_tableaux(lambda);
    long n = static_cast<long>(tableaux.size());
    std::map<StandardTableau, long> index;
    for (long i = 0; i < n; ++i) index.emplace(tableaux[static_cast<size_t>(i)], i);

    Rep rep;
    rep.d = d;
    rep.dim = n;
    for (int k = 0; k + 1 < d; ++k) {
        RatMatrix m(static_cast<size_t>(n), RatVector(static_cast<size_t>(n), Rat(0)));
        for (long ti = 0; ti < n; ++ti) {
            const auto& t = tableaux[static_cast<size_t>(ti)];
            auto [ra, ca] = t.cell_of(k + 1);
            auto [rb, cb] = t.cell_of(k + 2);
            long rho = (cb - rb) - (ca - ra);  // axial distance in t
            if (ra == rb) {
                m[static_cast<size_t>(ti)][static_cast<size_t>(ti)] = 1;
                continue;
            }
            if (ca == cb) {
                m[static_cast<size_t>(ti)][static_cast<size_t>(ti)] = -1;
                continue;
            }
            // swap k+1 <-> k+2 keeps standardness here
            auto rows = t.rows();
            rows[static_cast<size_t>(ra)][static_cast<size_t>(ca)] = k + 2;
            rows[static_cast<size_t>(rb)][static_cast<size_t>(cb)] = k + 1;
            long tj = index.at(StandardTableau(t.shape(), std::move(rows)));
            Rat inv(1, rho);
            inv.canonicalize();
            m[static_cast<size_t>(ti)][static_cast<size_t>(ti)] = inv;
            if (rho < 0) {
                // column convention: the negative-distance member maps across
                // with coefficient 1, the positive one with 1 - 1/rho^2
                m[static_cast<size_t>(tj)][static_cast<size_t>(ti)] = 1;
            } else {
                Rat c = 1 - inv * inv;
                c.canonicalize();
                m[static_cast<size_t>(tj)][static_cast<size_t>(ti)] = c;
            }
        }
        rep.gens.push_back(std::move(m));
    }
    return rep;
}

Rep tensor_rep(const Rep& a, const Rep& b) {
    if (a.d != b.d) throw ValidationError("tensor factors have different degrees");
    Rep out;
    out.d = a.d;
    out.dim = a.dim * b.dim;
    for (size_t g = 0; g < a.gens.size(); ++g) {
        RatMatrix m(static_cast<size_t>(out.dim), RatVector(static_cast<size_t>(out.dim), Rat(0)));
        for (long i1 = 0; i1 < a.dim; ++i1)
            for (long i2 = 0; i2 < b.dim; ++i2)
                for (long j1 = 0; j1 < a.dim; ++j1) {
                    const Rat& x = a.gens[g][static_cast<size_t>(i1)][static_cast<size_t>(j1)];
                    if (x == 0) continue;
                    for (long j2 = 0; j2 < b.dim; ++j2) {
                        const Rat& y = b.gens[g][static_cast<size_t>(i2)][static_cast<size_t>(j2)];
                        if (y == 0) continue;
                        m[static_cast<size_t>(i1 * b.dim + i2)]
                         [static_cast<size_t>(j1 * b.dim + j2)] = x * y;
                    }
                }
        out.gens.push_back(std::move(m));
    }
    return out;
}

Rep sym2_rep(const Rep& a) {
    // basis e_i e_j with i <= j
    std::vector<std::pair<long, long>> pairs;
    for (long i = 0; i < a.dim; ++i)
        for (long j = i; j < a.dim; ++j) pairs.emplace_back(i, j);
    std::map<std::pair<long, long>, size_t> index;
    for (size_t k = 0; k < pairs.size(); ++k) index.emplace(pairs[k], k);

    Rep out;
    out.d = a.d;
    out.dim = static_cast<long>(pairs.size());
    for (size_t g = 0; g < a.gens.size(); ++g) {
        const RatMatrix& m = a.gens[g];
        RatMatrix s(pairs.size(), RatVector(pairs.size(), Rat(0)));
        for (size_t col = 0; col < pairs.size(); ++col) {
            auto [j1, j2] = pairs[col];
            for (long i1 = 0; i1 < a.dim; ++i1) {
                const Rat& x = m[static_cast<size_t>(i1)][static_cast<size_t>(j1)];
                if (x == 0) continue;
                for (long i2 = 0; i2 < a.dim; ++i2) {
                    const Rat& y = m[static_cast<size_t>(i2)][static_cast<size_t>(j2)];
                    if (y == 0) continue;
                    auto key = std::minmax(i1, i2);
                    s[index.at(std::make_pair(key.first, key.second))][col] += x * y;
                }
            }
        }
        for (auto& row : s)
            for (auto& x : row) x.canonicalize();
        out.gens.push_back(std::move(s));
    }
    return out;
}

RatMatrix rep_matrix(const Rep& rep, const Perm& p) {
    RatMatrix m = identity_matrix(rep.dim);
    for (int k : adjacent_word(p)) m = matmul(m, rep.gens[static_cast<size_t>(k)]);
    return m;
}

Rat rep_trace(const Rep& rep, const Perm& p) {
    RatMatrix m = rep_matrix(rep, p);
    Rat tr = 0;
    for (size_t i = 0; i < m.size(); ++i) tr += m[i][i];
    tr.canonicalize();
    return tr;
}

std::optional<RatVector> fixed_isotypic_vector(const Rep& rep, const PermSubgroup& h,
                                               const Partition& mu) {
    if (mu.sum() != rep.d) throw ValidationError("mu must be a partition of the degree");
    if (rep.d > 7 && rep.dim > 64)
        throw ResourceError("fixed-vector search is limited to small representations");

    // fixed space of H
    std::vector<RatVector> fixed;
    {
        RatMatrix stacked;
        for (const auto& gen : h.generators()) {
            RatMatrix m = rep_matrix(rep, gen);
            for (long i = 0; i < rep.dim; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] -= 1;
            for (auto& row : m) stacked.push_back(std::move(row));
        }
        if (stacked.empty()) stacked.assign(1, RatVector(static_cast<size_t>(rep.dim), Rat(0)));
        fixed = rational_kernel(std::move(stacked));
    }
    if (fixed.empty()) return std::nullopt;

    // project the fixed basis onto the mu-isotypic part: walk the Cayley
    // graph once per fixed vector, accumulating chi_mu(sigma) sigma(v)
    const auto& table = CharacterTable::of(rep.d);
    auto sgens = adjacent_transpositions(rep.d);
    std::vector<RatVector> projected;
    for (const auto& v : fixed) {
        std::map<Perm, RatVector> images;
        images.emplace(Perm(rep.d), v);
        std::deque<Perm> queue{Perm(rep.d)};
        RatVector acc(static_cast<size_t>(rep.dim), Rat(0));
        while (!queue.empty()) {
            Perm cur = queue.front();
            queue.pop_front();
            const RatVector& w = images.at(cur);
            Rat chi(table.value(mu, cur.cycle_type()));
            for (size_t i = 0; i < acc.size(); ++i) acc[i] += chi * w[i];
            for (size_t g = 0; g < sgens.size(); ++g) {
                Perm next = sgens[g] * cur;
                if (images.count(next)) continue;
                images.emplace(next, matvec(rep.gens[g], w));
                queue.push_back(next);
            }
        }
        for (auto& x : acc) x.canonicalize();
        bool nonzero = false;
        for (const auto& x : acc) nonzero = nonzero || x != 0;
        if (nonzero) projected.push_back(std::move(acc));
    }
    if (projected.empty()) return std::nullopt;

    RatMatrix span = projected;
    auto pivots = rref(span);
    if (pivots.size() > 1)
        throw ValidationError("fixed isotypic space has dimension " +
                              std::to_string(pivots.size()) + "; expected at most 1");
    // normalize to a primitive integer vector
    RatVector result = span[0];
    Int lcm_den = 1;
    for (const auto& x : result) lcm_den = lcm(lcm_den, Rat(x).get_den());
    Int gcd_num = 0;
    std::vector<Int> scaled;
    for (const auto& x : result) {
        Rat y = Rat(x) * Rat(lcm_den);
        y.canonicalize();
        scaled.push_back(y.get_num());
        gcd_num = gcd(gcd_num, y.get_num());
    }
    if (gcd_num == 0) gcd_num = 1;
    RatVector out;
    for (const auto& x : scaled) out.push_back(Rat(x / gcd_num));
    return out;
}

std::optional<RatVector> resolution_pivot_vector(int d, int i) {
    if (i < 1 || i > d - 2) throw ValidationError("pivot index must satisfy 1 <= i <= d-2");
    Rep std_rep = specht_rep(hook_partition(d, 1));
    if (i == 1)
        return fixed_isotypic_vector(sym2_rep(std_rep), PermSubgroup::young(lambda_chain(d, 2)),
                                     lambda_chain(d, 2));
    if (i == d - 2)
        return fixed_isotypic_vector(tensor_rep(specht_rep(lambda_chain(d, d - 2)), sym2_rep(std_rep)),
                                     PermSubgroup::trivial(d), hook_partition(d, d - 1));
    return fixed_isotypic_vector(tensor_rep(specht_rep(lambda_chain(d, i)), std_rep),
                                 PermSubgroup::young(lambda_chain(d, i + 1)),
                                 lambda_chain(d, i + 1));
}

}  // namespace scrollar

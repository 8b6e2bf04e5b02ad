#include "scrollar/qpoly.hpp"

#include <algorithm>

namespace scrollar {

namespace {
const Rat kZero = Rat(0);
}

QPoly::QPoly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rat& c, long k) {
    if (c == 0) return {};
    std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
    v.back() = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (auto& x : c_) x.canonicalize();
}

long QPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return -1;
}

const Rat& QPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& s) const {
    if (s == 0) return {};
    std::vector<Rat> v = c_;
    for (auto& x : v) x *= s;
    return QPoly(std::move(v));
}

QPoly QPoly::div_exact(const QPoly& o) const {
    if (o.is_zero()) throw ConsistencyError("division by zero polynomial");
    if (is_zero()) return {};
    if (degree() < o.degree()) throw ConsistencyError("inexact polynomial division");
    std::vector<Rat> rem = c_;
    std::vector<Rat> quot(static_cast<size_t>(degree() - o.degree()) + 1, Rat(0));
    for (long k = degree() - o.degree(); k >= 0; --k) {
        Rat q = rem[static_cast<size_t>(k + o.degree())] / o.leading();
        q.canonicalize();
        quot[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (long j = 0; j <= o.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * o.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) throw ConsistencyError("inexact polynomial division");
    return QPoly(std::move(quot));
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    acc.canonicalize();
    return acc;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const Rat& c = coeff(k);
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0 ? " + " : " - ");
        else if (c < 0) out += "-";
        Rat a = abs(c);
        bool unit = (a == 1) && k != 0;
        if (!unit) out += scrollar::to_string(a);
        if (k > 0) {
            if (!unit) out += "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::vector<std::vector<QPoly>> kernel_basis(const QPolyMatrix& m) {
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    // Working copy of the matrix plus a unimodular transform accumulator.
    QPolyMatrix w = m;
    std::vector<std::vector<QPoly>> u(cols, std::vector<QPoly>(cols, QPoly()));
    for (size_t i = 0; i < cols; ++i) u[i][i] = QPoly(1);  // u is column major

    std::vector<char> is_pivot(cols, 0);
    auto col_sub = [&](size_t target, size_t source, const QPoly& q) {
        // column_target -= q * column_source
        for (size_t r = 0; r < rows; ++r) w[r][target] -= q * w[r][source];
        for (size_t r = 0; r < cols; ++r) u[target][r] -= q * u[source][r];
    };

    for (size_t r = 0; r < rows; ++r) {
        while (true) {
            // non-pivot columns with a nonzero entry in row r
            std::vector<size_t> active;
            for (size_t c = 0; c < cols; ++c)
                if (!is_pivot[c] && !w[r][c].is_zero()) active.push_back(c);
            if (active.size() <= 1) {
                if (active.size() == 1) is_pivot[active[0]] = 1;
                break;
            }
            size_t low = active[0];
            for (size_t c : active)
                if (w[r][c].degree() < w[r][low].degree()) low = c;
            for (size_t c : active) {
                if (c == low) continue;
                long shift = w[r][c].degree() - w[r][low].degree();
                Rat q = w[r][c].leading() / w[r][low].leading();
                col_sub(c, low, QPoly::monomial(q, shift));
            }
        }
    }

    std::vector<std::vector<QPoly>> kernel;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        bool zero = true;
        for (size_t r = 0; r < rows && zero; ++r) zero = w[r][c].is_zero();
        if (!zero) throw ConsistencyError("column reduction left a non-pivot, non-zero column");
        kernel.push_back(u[c]);
    }
    return kernel;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Rat inv = 1 / m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    det.canonicalize();
    return det;
}

QPoly determinant(const QPolyMatrix& m) {
    size_t n = m.size();
    if (n == 0) return QPoly(1);
    long bound = 0;
    for (size_t i = 0; i < n; ++i) {
        long row_deg = 0;
        for (size_t j = 0; j < n; ++j) row_deg = std::max(row_deg, m[i][j].degree());
        if (row_deg < 0) return QPoly();  // zero row
        bound += row_deg;
    }
    // evaluate at bound+1 points, then Newton interpolation
    std::vector<Rat> xs, ys;
    for (long p = 0; p <= bound; ++p) {
        Rat x(p);
        std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) num[i][j] = m[i][j].eval(x);
        xs.push_back(x);
        ys.push_back(determinant(std::move(num)));
    }
    // divided differences
    std::vector<Rat> dd = ys;
    for (size_t level = 1; level < dd.size(); ++level)
        for (size_t i = dd.size() - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    QPoly result;
    QPoly basis(1);
    for (size_t i = 0; i < dd.size(); ++i) {
        result += basis * dd[i];
        basis = basis * QPoly(std::vector<Rat>{-xs[i], Rat(1)});
    }
    return result;
}

std::vector<long> lattice_pair_invariants(const LaurentMatrix& transition) {
    const QPolyMatrix& m0 = transition.poly;
    size_t n = m0.size();
    for (const auto& row : m0)
        if (row.size() != n) throw ValidationError("transition matrix must be square");
    QPoly det = determinant(m0);
    if (det.is_zero()) throw ValidationError("lattices do not span the same space");
    if (det.valuation() != det.degree())
        throw ValidationError("transition determinant is not a monomial: the two lattices "
                              "disagree away from 0 and infinity");

    // Row reduction to a form with an invertible leading row-coefficient
    // matrix; the row degrees then read off the invariants.
    QPolyMatrix w = m0;
    auto row_degree = [&](size_t i) {
        long d = -1;
        for (size_t j = 0; j < n; ++j) d = std::max(d, w[i][j].degree());
        return d;
    };
    while (true) {
        std::vector<long> deg(n);
        std::vector<std::vector<Rat>> lead(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i) {
            deg[i] = row_degree(i);
            if (deg[i] < 0) throw ConsistencyError("zero row in an invertible transition matrix");
            for (size_t j = 0; j < n; ++j) lead[i][j] = w[i][j].coeff(deg[i]);
        }
        // find a rational kernel vector of the leading matrix
        std::vector<std::vector<Rat>> g = lead;
        std::vector<long> pivot_col(n, -1);
        size_t rank = 0;
        std::vector<std::vector<Rat>> ops(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i) ops[i][i] = 1;  // track row ops: g = ops * lead
        for (size_t col = 0; col < n && rank < n; ++col) {
            size_t p = rank;
            while (p < n && g[p][col] == 0) ++p;
            if (p == n) continue;
            std::swap(g[p], g[rank]);
            std::swap(ops[p], ops[rank]);
            for (size_t i = 0; i < n; ++i) {
                if (i == rank || g[i][col] == 0) continue;
                Rat f = g[i][col] / g[rank][col];
                for (size_t j = 0; j < n; ++j) {
                    g[i][j] -= f * g[rank][j];
                    ops[i][j] -= f * ops[rank][j];
                }
            }
            pivot_col[rank] = static_cast<long>(col);
            ++rank;
        }
        if (rank == n) {
            std::vector<long> out;
            for (size_t i = 0; i < n; ++i) out.push_back(-(deg[i] - transition.shift));
            std::sort(out.begin(), out.end());
            return out;
        }
        // combination ops[rank] annihilates the leading matrix rows; use it to
        // reduce the highest-degree participating row
        size_t target = n;
        for (size_t i = 0; i < n; ++i) {
            if (ops[rank][i] == 0) continue;
            if (target == n || deg[i] > deg[target]) target = i;
        }
        if (target == n) throw ConsistencyError("degenerate row reduction state");
        std::vector<QPoly> newrow(n);
        for (size_t j = 0; j < n; ++j) {
            QPoly acc;
            for (size_t i = 0; i < n; ++i) {
                if (ops[rank][i] == 0) continue;
                acc += w[i][j] * QPoly::monomial(ops[rank][i], deg[target] - deg[i]);
            }
            newrow[j] = std::move(acc);
        }
        long before = deg[target];
        w[target] = std::move(newrow);
        long after = row_degree(target);
        // ops[rank] kills the degree-`before` coefficients, so the degree must
        // strictly drop; a vanished row would contradict the nonzero monomial
        // determinant
        if (after >= before) throw ConsistencyError("row reduction failed to lower the degree");
        if (after < 0) throw ConsistencyError("zero row in an invertible transition matrix");
    }
}

}  // namespace scrollar

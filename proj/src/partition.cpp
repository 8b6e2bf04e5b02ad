#include "scrollar/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace scrollar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw ValidationError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ValidationError("partition parts must be weakly decreasing");
        sum_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw ValidationError("empty part in partition '" + text + "'");
        item = item.substr(a, b - a + 1);
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw ValidationError("bad part '" + item + "'");
            parts.push_back(v);
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception&) {
            throw ValidationError("bad part '" + item + "' in partition '" + text + "'");
        }
    }
    if (parts.empty()) throw ValidationError("empty partition string");
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(static_cast<size_t>(parts_[0]), 0);
    for (int row : parts_)
        for (int c = 0; c < row; ++c) ++cols[static_cast<size_t>(c)];
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 0; i < inner.rows(); ++i)
        if (inner[i] > (*this)[i]) return false;
    return true;
}

int Partition::fixed_points() const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
}

long Partition::lcm_parts() const {
    long l = 1;
    for (int p : parts_) l = std::lcm(l, static_cast<long>(p));
    return l;
}

bool Partition::is_hook() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

void enumerate_rec(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        prefix.push_back(next);
        enumerate_rec(remaining - next, next, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 1) throw ValidationError("enumerate_partitions requires d >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_rec(d, d, prefix, out);
    // The recursion emits descending-lexicographic order already; keep it
    // explicit so the contract does not silently depend on recursion shape.
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.parts() > b.parts();
    });
    return out;
}

int partition_index(const Partition& p) {
    auto all = enumerate_partitions(p.sum());
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == p) return static_cast<int>(i);
    throw ConsistencyError("partition not found in its own enumeration");
}

Int dimension(const Partition& p) {
    if (p.empty()) return 1;
    Partition conj = p.conjugate();
    Int num = factorial(p.sum());
    Int den = 1;
    for (int r = 0; r < p.rows(); ++r) {
        for (int c = 0; c < p[r]; ++c) {
            long arm = p[r] - c - 1;
            long leg = conj[c] - r - 1;
            den *= (arm + leg + 1);
        }
    }
    if (num % den != 0) throw ConsistencyError("hook product does not divide d!");
    return num / den;
}

Int class_size(const Partition& e) {
    // d! / prod_k k^{m_k} m_k!  with m_k the multiplicity of k among the parts.
    std::map<int, int> mult;
    for (int p : e.parts()) ++mult[p];
    Int z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        z *= factorial(m);
    }
    Int n = factorial(e.sum());
    if (n % z != 0) throw ConsistencyError("centralizer order does not divide d!");
    return n / z;
}

int sign_of_class(const Partition& e) {
    int swaps = e.sum() - e.rows();
    return (swaps % 2 == 0) ? 1 : -1;
}

Partition cycle_power_type(const Partition& e, long i) {
    std::vector<int> parts;
    for (int c : e.parts()) {
        long g = std::gcd(static_cast<long>(c), i);  // gcd(c, 0) = c handles rho^0
        for (long k = 0; k < g; ++k) parts.push_back(static_cast<int>(c / g));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

Partition hook_partition(int d, int i) {
    if (i < 0 || i > d - 1) throw ValidationError("hook index out of range");
    std::vector<int> parts{d - i};
    parts.insert(parts.end(), static_cast<size_t>(i), 1);
    return Partition(std::move(parts));
}

namespace {

std::vector<std::pair<int, int>> skew_cells(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) throw ValidationError("inner partition does not fit in outer");
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < outer.rows(); ++r) {
        int from = r < inner.rows() ? inner[r] : 0;
        for (int c = from; c < outer[r]; ++c) cells.emplace_back(r, c);
    }
    return cells;
}

}  // namespace

bool is_border_strip(const Partition& outer, const Partition& inner) {
    auto cells = skew_cells(outer, inner);
    if (cells.empty()) return false;
    // no 2x2 square
    auto has = [&cells](int r, int c) {
        return std::find(cells.begin(), cells.end(), std::make_pair(r, c)) != cells.end();
    };
    for (auto [r, c] : cells)
        if (has(r, c + 1) && has(r + 1, c) && has(r + 1, c + 1)) return false;
    // connected under 4-adjacency
    std::vector<char> seen(cells.size(), 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    size_t visited = 1;
    while (!stack.empty()) {
        auto [r, c] = cells[stack.back()];
        stack.pop_back();
        for (size_t j = 0; j < cells.size(); ++j) {
            if (seen[j]) continue;
            int dr = std::abs(cells[j].first - r), dc = std::abs(cells[j].second - c);
            if (dr + dc == 1) {
                seen[j] = 1;
                ++visited;
                stack.push_back(j);
            }
        }
    }
    return visited == cells.size();
}

int skew_height(const Partition& outer, const Partition& inner) {
    auto cells = skew_cells(outer, inner);
    if (cells.empty()) return 0;
    std::vector<int> rows;
    for (auto [r, c] : cells) {
        (void)c;
        rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return static_cast<int>(rows.size()) - 1;
}

}  // namespace scrollar

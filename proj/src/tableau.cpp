#include "scrollar/tableau.hpp"

#include <algorithm>

namespace scrollar {

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw ValidationError("tableau row count does not match shape");
    std::vector<char> seen(static_cast<size_t>(shape_.sum()) + 1, 0);
    for (int r = 0; r < shape_.rows(); ++r) {
        if (static_cast<int>(rows_[static_cast<size_t>(r)].size()) != shape_[r])
            throw ValidationError("tableau row length does not match shape");
        for (int c = 0; c < shape_[r]; ++c) {
            int v = entry(r, c);
            if (v < 1 || v > shape_.sum() || seen[static_cast<size_t>(v)])
                throw ValidationError("tableau entries must be exactly 1..d");
            seen[static_cast<size_t>(v)] = 1;
            if (c > 0 && entry(r, c - 1) >= v)
                throw ValidationError("tableau rows must strictly increase");
            if (r > 0 && entry(r - 1, c) >= v)
                throw ValidationError("tableau columns must strictly increase");
        }
    }
}

std::pair<int, int> StandardTableau::cell_of(int v) const {
    for (int r = 0; r < shape_.rows(); ++r)
        for (int c = 0; c < shape_[r]; ++c)
            if (entry(r, c) == v) return {r, c};
    throw ValidationError("value not present in tableau");
}

namespace {

void fill_rec(const Partition& shape, std::vector<std::vector<int>>& rows, std::vector<int>& fill,
              int next, std::vector<StandardTableau>& out) {
    int d = shape.sum();
    if (next > d) {
        out.emplace_back(shape, rows);
        return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
        int c = fill[static_cast<size_t>(r)];
        if (c >= shape[r]) continue;                       // row full
        if (r > 0 && fill[static_cast<size_t>(r - 1)] <= c) continue;  // cell above still empty
        rows[static_cast<size_t>(r)].push_back(next);
        ++fill[static_cast<size_t>(r)];
        fill_rec(shape, rows, fill, next + 1, out);
        --fill[static_cast<size_t>(r)];
        rows[static_cast<size_t>(r)].pop_back();
    }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<StandardTableau> out;
    if (shape.empty()) return out;
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.rows()));
    std::vector<int> fill(static_cast<size_t>(shape.rows()), 0);
    fill_rec(shape, rows, fill, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

ChargeData charge_data(const StandardTableau& t) {
    int d = t.size();
    ChargeData cd;
    for (int r = t.shape().rows() - 1; r >= 0; --r)
        for (int c = 0; c < t.shape()[r]; ++c) cd.reading_word.push_back(t.entry(r, c));

    std::vector<int> pos(static_cast<size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) pos[static_cast<size_t>(cd.reading_word[static_cast<size_t>(i)])] = i;

    cd.subscripts.assign(static_cast<size_t>(d), 0);
    for (int i = 1; i < d; ++i) {
        bool left_of_prev = pos[static_cast<size_t>(i + 1)] < pos[static_cast<size_t>(i)];
        cd.subscripts[static_cast<size_t>(i)] =
            cd.subscripts[static_cast<size_t>(i - 1)] + (left_of_prev ? 1 : 0);
    }
    for (int s : cd.subscripts) cd.charge += s;
    cd.max_subscript = d > 0 ? cd.subscripts.back() : 0;
    return cd;
}

StandardTableau row_tableau(int d) {
    std::vector<int> row(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) row[static_cast<size_t>(i)] = i + 1;
    return StandardTableau(Partition({d}), {row});
}

StandardTableau column_tableau(int d) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= d; ++i) rows.push_back({i});
    return StandardTableau(Partition(std::vector<int>(static_cast<size_t>(d), 1)), rows);
}

}  // namespace scrollar

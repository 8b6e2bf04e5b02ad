#pragma once

#include <vector>

#include "scrollar/partition.hpp"

namespace scrollar {

/// A standard Young tableau: entries 1..d, strictly increasing along rows and
/// columns. Stored row-major; derived data (reading word, charge) is computed
/// on demand.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.sum(); }
    int entry(int r, int c) const { return rows_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

    /// (row, col) of the cell containing value v (1-based value).
    std::pair<int, int> cell_of(int v) const;

    auto operator<=>(const StandardTableau&) const = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// All standard tableaux of the given shape, lexicographic in row-major
/// reading. Count equals dimension(shape).
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// Reading word (rows bottom-to-top, each left-to-right), the subscript word
/// s(1..d), their sum (the charge) and the largest subscript.
struct ChargeData {
    std::vector<int> reading_word;
    std::vector<int> subscripts;  // subscripts[i-1] = s(i)
    long charge = 0;
    int max_subscript = 0;

    int subscript(int i) const { return subscripts[static_cast<size_t>(i - 1)]; }
};

/// Subscript rule: s(1) = 0; s(i+1) = s(i) + 1 when i+1 sits to the left of i
/// in the reading word, else s(i+1) = s(i).
ChargeData charge_data(const StandardTableau& t);

/// Row tableau of shape (d) and column tableau of shape (1^d).
StandardTableau row_tableau(int d);
StandardTableau column_tableau(int d);

}  // namespace scrollar

#pragma once

#include "curvezeta/numeric.hpp"

#include <vector>

namespace curvezeta {

using QVector = std::vector<Rational>;

// A row space in reduced row-echelon form over Q: rows nonzero, pivot
// columns strictly increasing, pivots 1 and alone in their column.
class RrefMatrix {
public:
    explicit RrefMatrix(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<QVector>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Remainder of v modulo the row space.
    QVector reduce(QVector v) const;
    bool contains(const QVector& v) const;
    // Inserts v if it extends the row space; returns true if the rank grew.
    bool insert(QVector v);

private:
    int cols_;
    std::vector<QVector> rows_;
    std::vector<int> pivots_;
};

bool is_zero_vector(const QVector& v);

// Rank by plain Gaussian elimination; consumes its argument.
int rank_of(std::vector<QVector> rows);

// Basis of {y : row . y = 0 for every row}. rows need not be in any
// special form; cols is the common length.
std::vector<QVector> null_space(std::vector<QVector> rows, int cols);

} // namespace curvezeta

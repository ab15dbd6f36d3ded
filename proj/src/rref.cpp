#include "curvezeta/rref.hpp"

#include "curvezeta/errors.hpp"

#include <algorithm>

namespace curvezeta {

bool is_zero_vector(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

QVector RrefMatrix::reduce(QVector v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw InternalError("RrefMatrix::reduce: column mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational factor = v[static_cast<std::size_t>(pivots_[r])]; // pivot is 1
        if (factor == 0)
            continue;
        for (int j = pivots_[r]; j < cols_; ++j)
            if (rows_[r][static_cast<std::size_t>(j)] != 0)
                v[static_cast<std::size_t>(j)] -= factor * rows_[r][static_cast<std::size_t>(j)];
    }
    return v;
}

bool RrefMatrix::contains(const QVector& v) const {
    return is_zero_vector(reduce(v));
}

bool RrefMatrix::insert(QVector v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < cols_; ++j)
        if (v[static_cast<std::size_t>(j)] != 0) {
            p = j;
            break;
        }
    if (p < 0)
        return false;
    const Rational inv = Rational(1) / v[static_cast<std::size_t>(p)];
    for (int j = p; j < cols_; ++j)
        v[static_cast<std::size_t>(j)] *= inv;
    // Clear column p in the existing rows, then insert keeping pivot order.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = rows_[r][static_cast<std::size_t>(p)];
        if (f == 0)
            continue;
        for (int j = p; j < cols_; ++j)
            if (v[static_cast<std::size_t>(j)] != 0)
                rows_[r][static_cast<std::size_t>(j)] -= f * v[static_cast<std::size_t>(j)];
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
}

int rank_of(std::vector<QVector> rows) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t sel = row;
        while (sel < rows.size() && rows[sel][col] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[row], rows[sel]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0)
                continue;
            const Rational f = rows[r][col] / rows[row][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[r][j] -= f * rows[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<QVector> null_space(std::vector<QVector> rows, int cols) {
    RrefMatrix rref(cols);
    for (auto& r : rows)
        rref.insert(std::move(r));
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : rref.pivots())
        is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<QVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        QVector y(static_cast<std::size_t>(cols), Rational(0));
        y[static_cast<std::size_t>(f)] = 1;
        for (int r = 0; r < rref.rank(); ++r)
            y[static_cast<std::size_t>(rref.pivots()[static_cast<std::size_t>(r)])] =
                -rref.rows()[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)];
        basis.push_back(std::move(y));
    }
    return basis;
}

} // namespace curvezeta

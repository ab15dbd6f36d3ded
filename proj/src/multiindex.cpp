#include "curvezeta/multiindex.hpp"

#include "curvezeta/errors.hpp"

#include <algorithm>

namespace curvezeta {

MultiIndex MultiIndex::constant(int d, int value) {
    MultiIndex n(d);
    for (int i = 0; i < d; ++i)
        n[i] = value;
    return n;
}

MultiIndex MultiIndex::unit(int d, int i) {
    MultiIndex n(d);
    n[i] = 1;
    return n;
}

long long MultiIndex::norm() const {
    long long s = 0;
    for (int v : e_)
        s += v;
    return s;
}

bool MultiIndex::leq(const MultiIndex& other) const {
    if (dim() != other.dim())
        throw InternalError("MultiIndex dimension mismatch");
    for (int i = 0; i < dim(); ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

bool MultiIndex::strictly_less(const MultiIndex& other) const {
    if (dim() != other.dim())
        throw InternalError("MultiIndex dimension mismatch");
    for (int i = 0; i < dim(); ++i)
        if (e_[i] >= other.e_[i])
            return false;
    return true;
}

bool MultiIndex::is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v >= 0; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (dim() != o.dim())
        throw InternalError("MultiIndex dimension mismatch");
    MultiIndex r = *this;
    for (int i = 0; i < dim(); ++i)
        r[i] += o[i];
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (dim() != o.dim())
        throw InternalError("MultiIndex dimension mismatch");
    MultiIndex r = *this;
    for (int i = 0; i < dim(); ++i)
        r[i] -= o[i];
    return r;
}

MultiIndex MultiIndex::operator+(int k) const {
    MultiIndex r = *this;
    for (int i = 0; i < dim(); ++i)
        r[i] += k;
    return r;
}

MultiIndex MultiIndex::min(const MultiIndex& o) const {
    if (dim() != o.dim())
        throw InternalError("MultiIndex dimension mismatch");
    MultiIndex r = *this;
    for (int i = 0; i < dim(); ++i)
        r[i] = std::min(r[i], o[i]);
    return r;
}

MultiIndex MultiIndex::max(const MultiIndex& o) const {
    if (dim() != o.dim())
        throw InternalError("MultiIndex dimension mismatch");
    MultiIndex r = *this;
    for (int i = 0; i < dim(); ++i)
        r[i] = std::max(r[i], o[i]);
    return r;
}

MultiIndex MultiIndex::clamped_nonnegative() const {
    MultiIndex r = *this;
    for (int i = 0; i < dim(); ++i)
        r[i] = std::max(r[i], 0);
    return r;
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(e_[i]);
    }
    return s + ")";
}

std::string MultiIndex::key() const {
    std::string s;
    for (int i = 0; i < dim(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(e_[i]);
    }
    return s;
}

void for_each_in_box(const MultiIndex& lo, const MultiIndex& hi,
                     const std::function<void(const MultiIndex&)>& f) {
    const int d = lo.dim();
    if (d != hi.dim())
        throw InternalError("box bounds dimension mismatch");
    for (int i = 0; i < d; ++i)
        if (lo[i] > hi[i])
            return;
    MultiIndex n = lo;
    while (true) {
        f(n);
        int i = d - 1;
        while (i >= 0 && n[i] == hi[i]) {
            n[i] = lo[i];
            --i;
        }
        if (i < 0)
            return;
        ++n[i];
    }
}

} // namespace curvezeta

#include "curvezeta/series.hpp"

#include "curvezeta/errors.hpp"

#include <algorithm>

namespace curvezeta {

namespace {

void require_same_shape(const SeriesElement& a, const SeriesElement& b) {
    if (a.branch_count() != b.branch_count())
        throw InputError("branch-count mismatch between series operands");
}

} // namespace

SeriesElement::SeriesElement(int branch_count, MultiIndex truncation)
    : branches_(static_cast<std::size_t>(branch_count)), trunc_(std::move(truncation)) {
    if (branch_count < 1)
        throw InputError("series needs at least one branch");
    if (trunc_.dim() != branch_count)
        throw InputError("series truncation dimension must equal branch count");
    if (!trunc_.is_nonnegative())
        throw InputError("series truncation must be non-negative");
}

SeriesElement SeriesElement::constant(int branch_count, MultiIndex truncation,
                                      const Rational& value) {
    SeriesElement s(branch_count, std::move(truncation));
    for (int i = 0; i < branch_count; ++i)
        s.set_coeff(i, 0, value);
    return s;
}

SeriesElement SeriesElement::monomial(int branch_count, MultiIndex truncation,
                                      int branch, int exp, const Rational& coeff) {
    SeriesElement s(branch_count, std::move(truncation));
    s.set_coeff(branch, exp, coeff);
    return s;
}

Rational SeriesElement::coeff(int branch, int exp) const {
    const auto& m = branches_[static_cast<std::size_t>(branch)];
    auto it = m.find(exp);
    return it == m.end() ? Rational(0) : it->second;
}

void SeriesElement::set_coeff(int branch, int exp, const Rational& value) {
    if (branch < 0 || branch >= branch_count())
        throw InputError("branch index out of range");
    if (exp < 0)
        throw InputError("negative exponent in series");
    auto& m = branches_[static_cast<std::size_t>(branch)];
    if (exp > trunc_[branch] || value == 0)
        m.erase(exp);
    else
        m[exp] = value;
}

bool SeriesElement::is_zero() const {
    return std::all_of(branches_.begin(), branches_.end(),
                       [](const auto& m) { return m.empty(); });
}

SeriesElement series_add(const SeriesElement& a, const SeriesElement& b) {
    require_same_shape(a, b);
    SeriesElement r(a.branch_count(), a.truncation().min(b.truncation()));
    for (int i = 0; i < a.branch_count(); ++i) {
        for (const auto& [e, c] : a.branch_terms(i))
            r.set_coeff(i, e, c);
        for (const auto& [e, c] : b.branch_terms(i))
            r.set_coeff(i, e, r.coeff(i, e) + c);
    }
    return r;
}

SeriesElement series_sub(const SeriesElement& a, const SeriesElement& b) {
    return series_add(a, series_scale(b, Rational(-1)));
}

SeriesElement series_scale(const SeriesElement& a, const Rational& c) {
    SeriesElement r(a.branch_count(), a.truncation());
    for (int i = 0; i < a.branch_count(); ++i)
        for (const auto& [e, v] : a.branch_terms(i))
            r.set_coeff(i, e, v * c);
    return r;
}

SeriesElement series_mul(const SeriesElement& a, const SeriesElement& b) {
    require_same_shape(a, b);
    SeriesElement r(a.branch_count(), a.truncation().min(b.truncation()));
    for (int i = 0; i < a.branch_count(); ++i) {
        const int bound = r.truncation()[i];
        for (const auto& [ea, ca] : a.branch_terms(i)) {
            if (ea > bound)
                break;
            for (const auto& [eb, cb] : b.branch_terms(i)) {
                if (ea + eb > bound)
                    break;
                r.set_coeff(i, ea + eb, r.coeff(i, ea + eb) + ca * cb);
            }
        }
    }
    return r;
}

SeriesElement series_pow(const SeriesElement& a, int n) {
    if (n < 0)
        throw InputError("negative series power");
    SeriesElement r = SeriesElement::constant(a.branch_count(), a.truncation(), Rational(1));
    for (int k = 0; k < n; ++k)
        r = series_mul(r, a);
    return r;
}

std::vector<std::optional<int>> valuation(const SeriesElement& a) {
    std::vector<std::optional<int>> v(static_cast<std::size_t>(a.branch_count()));
    for (int i = 0; i < a.branch_count(); ++i) {
        const auto& m = a.branch_terms(i);
        if (!m.empty())
            v[static_cast<std::size_t>(i)] = m.begin()->first;
    }
    return v;
}

SeriesElement invert_unit(const SeriesElement& a) {
    SeriesElement r(a.branch_count(), a.truncation());
    for (int i = 0; i < a.branch_count(); ++i) {
        const Rational a0 = a.coeff(i, 0);
        if (a0 == 0)
            throw InputError("invert_unit: branch " + std::to_string(i + 1) +
                             " is not a unit");
        // b_0 = 1/a_0, b_k = -(sum_{j=1..k} a_j b_{k-j}) / a_0
        std::vector<Rational> b(static_cast<std::size_t>(a.truncation()[i]) + 1);
        b[0] = Rational(1) / a0;
        for (int k = 1; k <= a.truncation()[i]; ++k) {
            Rational acc(0);
            for (const auto& [j, aj] : a.branch_terms(i)) {
                if (j < 1)
                    continue;
                if (j > k)
                    break;
                acc += aj * b[static_cast<std::size_t>(k - j)];
            }
            b[static_cast<std::size_t>(k)] = -acc / a0;
        }
        for (int k = 0; k <= a.truncation()[i]; ++k)
            r.set_coeff(i, k, b[static_cast<std::size_t>(k)]);
    }
    return r;
}

SeriesElement nth_root(const SeriesElement& a, int n) {
    if (n < 1)
        throw InputError("nth_root: root order must be positive");
    const int d = a.branch_count();
    SeriesElement x(d, a.truncation());
    for (int i = 0; i < d; ++i) {
        const Rational a0 = a.coeff(i, 0);
        if (a0 == 0)
            throw InputError("nth_root: branch " + std::to_string(i + 1) +
                             " is not a unit");
        Rational r0;
        if (!rational_nth_root(a0, n, r0))
            throw InputError("nth_root: constant term of branch " +
                             std::to_string(i + 1) + " is not an exact " +
                             std::to_string(n) + "-th power in Q");
        x.set_coeff(i, 0, r0);
    }
    if (n == 1)
        return a;
    // Newton: x <- x - (x^n - a) / (n x^(n-1)); t-adic accuracy doubles per step.
    int max_trunc = 0;
    for (int i = 0; i < d; ++i)
        max_trunc = std::max(max_trunc, a.truncation()[i]);
    int steps = 1;
    while ((1 << steps) < max_trunc + 2)
        ++steps;
    for (int s = 0; s <= steps; ++s) {
        SeriesElement xn1 = series_pow(x, n - 1);
        SeriesElement err = series_sub(series_mul(xn1, x), a);
        if (err.is_zero())
            break;
        SeriesElement step = series_mul(err, invert_unit(series_scale(xn1, Rational(n))));
        x = series_sub(x, step);
    }
    if (!series_sub(series_pow(x, n), a).is_zero())
        throw InternalError("nth_root: Newton iteration failed to converge");
    return x;
}

} // namespace curvezeta

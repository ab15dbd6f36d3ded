#include "curvezeta/motivic.hpp"

#include "curvezeta/errors.hpp"

#include <algorithm>

namespace curvezeta {

// ---------------------------------------------------------------- UPoly --

UPoly UPoly::monomial(int exp, const Int& coeff) {
    UPoly p;
    p.set(exp, coeff);
    return p;
}

UPoly UPoly::u_minus_one() {
    UPoly p;
    p.set(1, 1);
    p.set(0, -1);
    return p;
}

void UPoly::set(int exp, const Int& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

Int UPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

int UPoly::min_exp() const {
    if (terms_.empty())
        throw InternalError("min_exp of zero UPoly");
    return terms_.begin()->first;
}

int UPoly::max_exp() const {
    if (terms_.empty())
        throw InternalError("max_exp of zero UPoly");
    return terms_.rbegin()->first;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    for (const auto& [e, c] : o.terms_)
        set(e, coeff(e) + c);
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    for (const auto& [e, c] : o.terms_)
        set(e, coeff(e) - c);
    return *this;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r = *this;
    r += o;
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
    UPoly r = *this;
    r -= o;
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    UPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
}

UPoly UPoly::operator*(const Int& c) const {
    UPoly r;
    if (c == 0)
        return r;
    for (const auto& [e, v] : terms_)
        r.terms_[e] = v * c;
    return r;
}

UPoly UPoly::shifted(int exp) const {
    UPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_[e + exp] = c;
    return r;
}

UPoly UPoly::pow(int k) const {
    if (k < 0)
        throw InternalError("UPoly::pow with negative exponent");
    UPoly r = one();
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

UPoly UPoly::divide_exact(const UPoly& divisor) const {
    if (divisor.is_zero())
        throw InternalError("division by zero UPoly");
    if (is_zero())
        return zero();
    // Shift both to honest polynomials and long-divide over Z.
    const int sa = min_exp();
    const int sb = divisor.min_exp();
    std::vector<Int> a(static_cast<std::size_t>(max_exp() - sa) + 1);
    std::vector<Int> b(static_cast<std::size_t>(divisor.max_exp() - sb) + 1);
    for (const auto& [e, c] : terms_)
        a[static_cast<std::size_t>(e - sa)] = c;
    for (const auto& [e, c] : divisor.terms_)
        b[static_cast<std::size_t>(e - sb)] = c;
    if (a.size() < b.size())
        throw InternalError("inexact UPoly division (degree)");
    std::vector<Int> q(a.size() - b.size() + 1);
    const Int lead = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        const Int& top = a[k + b.size() - 1];
        if (top % lead != 0)
            throw InternalError("inexact UPoly division (leading coefficient)");
        q[k] = top / lead;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[k + j] -= q[k] * b[j];
    }
    for (const Int& rem : a)
        if (rem != 0)
            throw InternalError("inexact UPoly division (remainder)");
    UPoly result;
    for (std::size_t k = 0; k < q.size(); ++k)
        result.set(static_cast<int>(k) + sa - sb, q[k]);
    return result;
}

Rational UPoly::eval(const Rational& q) const {
    if (q == 0)
        throw InputError("UPoly evaluation at 0 (negative exponents present)");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational p(1);
        const int a = e >= 0 ? e : -e;
        for (int i = 0; i < a; ++i)
            p *= q;
        if (e < 0)
            p = Rational(1) / p;
        acc += Rational(c) * p;
    }
    return acc;
}

Int UPoly::eval_one() const {
    Int acc(0);
    for (const auto& [e, c] : terms_)
        acc += c;
    return acc;
}

// ------------------------------------------------------- class formulas --

UPoly class_In(const SemigroupData& s, const MultiIndex& n) {
    const int d = s.branch_count();
    UPoly acc;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        MultiIndex shift = MultiIndex::zero(d);
        int bits = 0;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) {
                shift[i] = 1;
                ++bits;
            }
        const int l = s.l(n + shift);
        acc += UPoly::monomial(-l, bits % 2 == 0 ? 1 : -1);
    }
    acc = acc.shifted(static_cast<int>(n.norm()) + 1);
    return acc.divide_exact(UPoly::u_minus_one());
}

UPoly class_J(int delta, int d) {
    if (d < 1 || delta < d - 1)
        throw InputError("class_J requires delta >= d-1 >= 0");
    return UPoly::u_minus_one().pow(d - 1).shifted(delta - d + 1);
}

UPoly class_units_jet(int delta, const MultiIndex& c) {
    if (c == MultiIndex::zero(c.dim()))
        return UPoly::u_minus_one();
    return UPoly::u_minus_one().shifted(static_cast<int>(c.norm()) - delta - 1);
}

// ---------------------------------------------------------------- TPoly --

TPoly TPoly::monomial(const MultiIndex& e, UPoly c) {
    TPoly p(e.dim());
    p.add_term(e, c);
    return p;
}

long long TPoly::degree() const {
    long long deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, e.norm());
    return deg;
}

UPoly TPoly::coeff(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? UPoly::zero() : it->second;
}

void TPoly::add_term(const MultiIndex& e, const UPoly& c) {
    if (e.dim() != d_)
        throw InternalError("TPoly term of wrong dimension");
    if (!e.is_nonnegative())
        throw InternalError("TPoly exponents must be non-negative");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (d_ != o.d_)
        throw InternalError("TPoly dimension mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly r = *this;
    r += o;
    return r;
}

TPoly TPoly::operator-(const TPoly& o) const {
    TPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
    if (d_ != o.d_)
        throw InternalError("TPoly dimension mismatch");
    TPoly r(d_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

TPoly TPoly::scaled(const UPoly& c) const {
    TPoly r(d_);
    for (const auto& [e, v] : terms_)
        r.add_term(e, v * c);
    return r;
}

TPoly TPoly::scaled_monomial(const UPoly& c, const MultiIndex& e) const {
    TPoly r(d_);
    for (const auto& [ee, v] : terms_)
        r.add_term(ee + e, v * c);
    return r;
}

TPoly TPoly::substitute_single() const {
    TPoly r(1);
    for (const auto& [e, c] : terms_)
        r.add_term(MultiIndex{static_cast<int>(e.norm())}, c);
    return r;
}

UPoly TPoly::eval_at_u() const {
    UPoly acc;
    for (const auto& [e, c] : terms_)
        acc += c.shifted(static_cast<int>(e.norm()));
    return acc;
}

TPoly TPoly::scale_vars_by_u() const {
    TPoly r(d_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, c.shifted(static_cast<int>(e.norm())));
    return r;
}

TPoly TPoly::reversed(const MultiIndex& c) const {
    TPoly r(d_);
    for (const auto& [e, v] : terms_) {
        if (!e.leq(c))
            throw InternalError("TPoly::reversed: exponent " + e.str() +
                                " exceeds " + c.str());
        r.add_term(c - e, v);
    }
    return r;
}

TPoly denominator_factor(int d, int var) {
    TPoly f = TPoly::one(d);
    f.add_term(MultiIndex::unit(d, var), UPoly::monomial(-1, -1));
    return f;
}

std::optional<TPoly> divide_by_denominator_factor(const TPoly& p, int var) {
    if (p.is_zero())
        return TPoly(p.d());
    // Slices by the exponent of T_var: Q_k = N_k + U^-1 Q_{k-1}; the division
    // is exact iff Q_m vanishes.
    int m = 0;
    for (const auto& [e, c] : p.terms())
        m = std::max(m, e[var]);
    std::vector<TPoly> slices(static_cast<std::size_t>(m) + 1, TPoly(p.d()));
    for (const auto& [e, c] : p.terms()) {
        MultiIndex rest = e;
        rest[var] = 0;
        slices[static_cast<std::size_t>(e[var])].add_term(rest, c);
    }
    TPoly quotient(p.d());
    TPoly prev(p.d());
    for (int k = 0; k <= m; ++k) {
        TPoly qk = slices[static_cast<std::size_t>(k)] + prev.scaled(UPoly::u(-1));
        if (k == m) {
            if (!qk.is_zero())
                return std::nullopt;
            break;
        }
        MultiIndex shift = MultiIndex::zero(p.d());
        shift[var] = k;
        quotient += qk.scaled_monomial(UPoly::one(), shift);
        prev = qk;
    }
    return quotient;
}

// -------------------------------------------------------------- ZetaForm --

ZetaForm::ZetaForm(TPoly num, std::vector<int> den_mult)
    : num_(std::move(num)), den_(std::move(den_mult)) {
    if (static_cast<int>(den_.size()) != num_.d())
        throw InternalError("ZetaForm denominator of wrong dimension");
    for (int m : den_)
        if (m < 0)
            throw InternalError("negative denominator multiplicity");
}

ZetaForm ZetaForm::zero(int d) {
    return ZetaForm(TPoly(d), std::vector<int>(static_cast<std::size_t>(d), 0));
}

TPoly ZetaForm::denominator_expanded() const {
    TPoly r = TPoly::one(d());
    for (int i = 0; i < d(); ++i)
        for (int k = 0; k < den_[static_cast<std::size_t>(i)]; ++k)
            r = r * denominator_factor(d(), i);
    return r;
}

ZetaForm& ZetaForm::operator+=(const ZetaForm& o) {
    if (d() != o.d())
        throw InternalError("ZetaForm dimension mismatch");
    std::vector<int> target(static_cast<std::size_t>(d()));
    for (int i = 0; i < d(); ++i)
        target[static_cast<std::size_t>(i)] =
            std::max(den_[static_cast<std::size_t>(i)], o.den_[static_cast<std::size_t>(i)]);
    TPoly a = num_;
    TPoly b = o.num_;
    for (int i = 0; i < d(); ++i) {
        for (int k = den_[static_cast<std::size_t>(i)]; k < target[static_cast<std::size_t>(i)]; ++k)
            a = a * denominator_factor(d(), i);
        for (int k = o.den_[static_cast<std::size_t>(i)]; k < target[static_cast<std::size_t>(i)]; ++k)
            b = b * denominator_factor(d(), i);
    }
    num_ = a + b;
    den_ = std::move(target);
    return *this;
}

ZetaForm ZetaForm::scaled(const UPoly& c) const {
    return ZetaForm(num_.scaled(c), den_);
}

ZetaForm ZetaForm::scaled_monomial(const UPoly& c, const MultiIndex& e) const {
    return ZetaForm(num_.scaled_monomial(c, e), den_);
}

void ZetaForm::normalize() {
    for (int i = 0; i < d(); ++i)
        while (den_[static_cast<std::size_t>(i)] > 0) {
            auto q = divide_by_denominator_factor(num_, i);
            if (!q)
                break;
            num_ = std::move(*q);
            --den_[static_cast<std::size_t>(i)];
        }
}

bool ZetaForm::equals(const ZetaForm& o) const {
    if (d() != o.d())
        return false;
    return num_ * o.denominator_expanded() == o.num_ * denominator_expanded();
}

ZetaForm ZetaForm::substitute_single() const {
    int total = 0;
    for (int m : den_)
        total += m;
    return ZetaForm(num_.substitute_single(), {total});
}

// ----------------------------------------------------------------- QPoly --

QPoly QPoly::monomial(const MultiIndex& e, const Rational& c) {
    QPoly p(e.dim());
    p.add_term(e, c);
    return p;
}

long long QPoly::degree() const {
    long long deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, e.norm());
    return deg;
}

Rational QPoly::coeff(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QPoly::add_term(const MultiIndex& e, const Rational& c) {
    if (e.dim() != d_)
        throw InternalError("QPoly term of wrong dimension");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0)
            terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (d_ != o.d_)
        throw InternalError("QPoly dimension mismatch");
    QPoly r(d_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

QPoly QPoly::substitute_single() const {
    QPoly r(1);
    for (const auto& [e, c] : terms_)
        r.add_term(MultiIndex{static_cast<int>(e.norm())}, c);
    return r;
}

QPoly QPoly::reversed_full(long long degree) const {
    if (d_ != 1)
        throw InternalError("reversed_full needs a single-variable polynomial");
    QPoly r(1);
    for (const auto& [e, c] : terms_) {
        if (e.norm() > degree)
            throw InternalError("reversed_full: exponent above the given degree");
        r.add_term(MultiIndex{static_cast<int>(degree - e.norm())}, c);
    }
    return r;
}

// ------------------------------------------------------ RationalFunction --

RationalFunction::RationalFunction(QPoly num, std::vector<LinearFactor> den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (const auto& f : den_)
        if (f.var < 0 || f.var >= num_.d())
            throw InternalError("RationalFunction denominator variable out of range");
}

QPoly RationalFunction::denominator_expanded() const {
    QPoly r = QPoly::one(num_.d());
    for (const auto& f : den_) {
        QPoly factor = QPoly::one(num_.d());
        factor.add_term(MultiIndex::unit(num_.d(), f.var), -f.coeff);
        r = r * factor;
    }
    return r;
}

namespace {

// Synthetic division of p by (1 - a T_var); nullopt when not exact.
std::optional<QPoly> divide_by_linear_factor(const QPoly& p, const LinearFactor& f) {
    if (p.is_zero())
        return QPoly(p.d());
    int m = 0;
    for (const auto& [e, c] : p.terms())
        m = std::max(m, e[f.var]);
    std::vector<QPoly> slices(static_cast<std::size_t>(m) + 1, QPoly(p.d()));
    for (const auto& [e, c] : p.terms()) {
        MultiIndex rest = e;
        rest[f.var] = 0;
        slices[static_cast<std::size_t>(e[f.var])].add_term(rest, c);
    }
    QPoly quotient(p.d());
    QPoly prev(p.d());
    for (int k = 0; k <= m; ++k) {
        QPoly scaled(p.d());
        for (const auto& [e, c] : prev.terms())
            scaled.add_term(e, c * f.coeff);
        QPoly qk = slices[static_cast<std::size_t>(k)] + scaled;
        if (k == m) {
            if (!qk.is_zero())
                return std::nullopt;
            break;
        }
        MultiIndex shift = MultiIndex::zero(p.d());
        shift[f.var] = k;
        for (const auto& [e, c] : qk.terms())
            quotient.add_term(e + shift, c);
        prev = qk;
    }
    return quotient;
}

} // namespace

void RationalFunction::normalize() {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < den_.size(); ++i) {
            auto q = divide_by_linear_factor(num_, den_[i]);
            if (q) {
                num_ = std::move(*q);
                den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
                progress = true;
                break;
            }
        }
    }
}

bool RationalFunction::equals(const RationalFunction& o) const {
    if (d() != o.d())
        return false;
    return num_ * o.denominator_expanded() == o.num_ * denominator_expanded();
}

// ---------------------------------------------------------- CartierZeta --

CartierZeta::CartierZeta(TPoly num, int den_power)
    : num_(std::move(num)), den_power_(den_power) {
    if (num_.d() != 1)
        throw InternalError("CartierZeta is a single-variable object");
    if (den_power_ < 0)
        throw InternalError("negative denominator power");
}

void CartierZeta::normalize() {
    // (1 - T) divides exactly iff the synthetic recurrence terminates at 0.
    while (den_power_ > 0) {
        if (num_.is_zero()) {
            den_power_ = 0;
            break;
        }
        int m = 0;
        for (const auto& [e, c] : num_.terms())
            m = std::max(m, e[0]);
        std::vector<UPoly> slices(static_cast<std::size_t>(m) + 1);
        for (const auto& [e, c] : num_.terms())
            slices[static_cast<std::size_t>(e[0])] = c;
        std::vector<UPoly> q(static_cast<std::size_t>(m) + 1);
        UPoly prev;
        for (int k = 0; k <= m; ++k) {
            q[static_cast<std::size_t>(k)] = slices[static_cast<std::size_t>(k)] + prev;
            prev = q[static_cast<std::size_t>(k)];
        }
        if (!q[static_cast<std::size_t>(m)].is_zero())
            break;
        TPoly quotient(1);
        for (int k = 0; k < m; ++k)
            quotient.add_term(MultiIndex{k}, q[static_cast<std::size_t>(k)]);
        num_ = std::move(quotient);
        --den_power_;
    }
}

RationalFunction CartierZeta::at(const Rational& q) const {
    if (q == 0)
        throw InputError("Cartier factor evaluation at q = 0");
    QPoly num(1);
    for (const auto& [e, c] : num_.terms())
        num.add_term(e, c.eval(q));
    std::vector<LinearFactor> den(static_cast<std::size_t>(den_power_),
                                  LinearFactor{0, Rational(1)});
    RationalFunction r(std::move(num), std::move(den));
    r.normalize();
    return r;
}

} // namespace curvezeta

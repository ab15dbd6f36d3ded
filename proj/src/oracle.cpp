#include "curvezeta/oracle.hpp"

#include "curvezeta/errors.hpp"

#include <algorithm>
#include <set>

namespace curvezeta {

// --------------------------------------------------------- series oracle --

TruncatedTPoly::TruncatedTPoly(int d, int degree_bound)
    : d_(d), bound_(degree_bound) {
    if (degree_bound < 0)
        throw InputError("negative oracle degree bound");
}

UPoly TruncatedTPoly::coeff(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? UPoly::zero() : it->second;
}

void TruncatedTPoly::add_term(const MultiIndex& e, const UPoly& c) {
    if (e.dim() != d_)
        throw InternalError("truncated term of wrong dimension");
    if (e.norm() > bound_)
        return;
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

TruncatedTPoly series_sum_oracle(const SemigroupData& s, int degree_bound) {
    const int d = s.branch_count();
    const MultiIndex& c = s.conductor();
    TruncatedTPoly out(d, degree_bound);
    for_each_in_box(MultiIndex::zero(d), MultiIndex::constant(d, degree_bound),
                    [&](const MultiIndex& n) {
                        if (n.norm() > degree_bound || !s.contains(n))
                            return;
                        UPoly cls;
                        if (c.leq(n)) {
                            cls = class_J(s.delta(), d);
                        } else {
                            // Stratum corner: coordinates at or above the
                            // conductor are capped to it (Remark-style class
                            // constancy along the stratum).
                            const MultiIndex f = n.min(c);
                            cls = class_In(s, f);
                        }
                        out.add_term(n, cls.shifted(-static_cast<int>(n.norm())));
                    });
    return out;
}

TruncatedTPoly taylor_expand(const ZetaForm& z, int degree_bound) {
    const int d = z.d();
    TruncatedTPoly out(d, degree_bound);
    for (const auto& [e, c] : z.num().terms())
        out.add_term(e, c);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < z.den_mult()[static_cast<std::size_t>(i)]; ++k) {
            // Multiply by sum_{j <= D} U^-j T_i^j, truncating as we go.
            TruncatedTPoly next(d, degree_bound);
            for (const auto& [e, coeff] : out.terms())
                for (int j = 0; e.norm() + j <= degree_bound; ++j) {
                    MultiIndex shifted = e;
                    shifted[i] += j;
                    next.add_term(shifted, coeff.shifted(-j));
                }
            out = std::move(next);
        }
    }
    return out;
}

CheckResult compare(const TruncatedTPoly& a, const TruncatedTPoly& b) {
    if (a.d() != b.d() || a.degree_bound() != b.degree_bound())
        throw InputError("oracle comparison of incompatible truncations");
    std::set<MultiIndex> keys;
    for (const auto& [e, c] : a.terms())
        keys.insert(e);
    for (const auto& [e, c] : b.terms())
        keys.insert(e);
    for (const auto& e : keys)
        if (!(a.coeff(e) == b.coeff(e)))
            return CheckResult::failed("compare", "coefficient of T^" + e.str() +
                                                      " differs");
    return CheckResult::passed("compare");
}

// ----------------------------------------------------- finite-field part --

namespace {

using FpVector = std::vector<long long>;

long long mod_pow(long long base, long long exp, long long p) {
    long long r = 1 % p;
    base %= p;
    if (base < 0)
        base += p;
    while (exp > 0) {
        if (exp & 1)
            r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

long long mod_inverse(long long a, long long p) {
    return mod_pow(a, p - 2, p);
}

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int q = 2; 1LL * q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

long long rational_mod_p(const Rational& r, int p) {
    const Int num = numerator(r) % p;
    const Int den = denominator(r) % p;
    if (den == 0)
        throw InputError("prime " + std::to_string(p) +
                         " divides a condition denominator");
    long long n = num.convert_to<long long>() % p;
    if (n < 0)
        n += p;
    long long d = den.convert_to<long long>() % p;
    if (d < 0)
        d += p;
    return n * mod_inverse(d, p) % p;
}

// Row echelon over F_p with unit pivots; returns the reduced rows.
std::vector<FpVector> fp_rref(std::vector<FpVector> rows, long long p) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        const long long inv = mod_inverse(rows[r][col], p);
        for (auto& x : rows[r])
            x = x * inv % p;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][col] == 0)
                continue;
            const long long f = rows[k][col];
            for (std::size_t j = 0; j < cols; ++j)
                rows[k][j] = ((rows[k][j] - f * rows[r][j]) % p + p) % p;
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// Basis of {y : row . y = 0} over F_p.
std::vector<FpVector> fp_kernel(const std::vector<FpVector>& rows, int cols,
                                long long p) {
    auto rref = fp_rref(rows, p);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (const auto& row : rref) {
        int pc = -1;
        for (int j = 0; j < cols; ++j)
            if (row[static_cast<std::size_t>(j)] != 0) {
                pc = j;
                break;
            }
        if (pc >= 0) {
            pivot_col.push_back(pc);
            is_pivot[static_cast<std::size_t>(pc)] = true;
        }
    }
    std::vector<FpVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        FpVector y(static_cast<std::size_t>(cols), 0);
        y[static_cast<std::size_t>(f)] = 1;
        for (std::size_t r = 0; r < rref.size(); ++r) {
            const long long v = rref[r][static_cast<std::size_t>(f)];
            if (v != 0)
                y[static_cast<std::size_t>(pivot_col[r])] = (p - v) % p;
        }
        basis.push_back(std::move(y));
    }
    return basis;
}

// Jet coordinates (branch, exp < c_i) in graded order, mirroring
// JetCoordinates over Q.
struct FpJets {
    MultiIndex c;
    std::vector<std::pair<int, int>> coords;
    std::vector<std::vector<int>> index;

    explicit FpJets(const MultiIndex& conductor) : c(conductor) {
        const int d = c.dim();
        int max_exp = 0;
        for (int i = 0; i < d; ++i)
            max_exp = std::max(max_exp, c[i]);
        index.assign(static_cast<std::size_t>(d), {});
        for (int i = 0; i < d; ++i)
            index[static_cast<std::size_t>(i)].assign(
                static_cast<std::size_t>(std::max(c[i], 0)), -1);
        for (int e = 0; e < max_exp; ++e)
            for (int i = 0; i < d; ++i)
                if (e < c[i]) {
                    index[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] =
                        static_cast<int>(coords.size());
                    coords.emplace_back(i, e);
                }
    }

    int count() const { return static_cast<int>(coords.size()); }
    int at(int branch, int exp) const {
        return index[static_cast<std::size_t>(branch)][static_cast<std::size_t>(exp)];
    }

    FpVector mul(const FpVector& a, const FpVector& b, long long p) const {
        FpVector r(static_cast<std::size_t>(count()), 0);
        const int d = c.dim();
        for (int i = 0; i < d; ++i)
            for (int u = 0; u < c[i]; ++u) {
                const long long au = a[static_cast<std::size_t>(at(i, u))];
                if (au == 0)
                    continue;
                for (int v = 0; u + v < c[i]; ++v) {
                    const long long bv = b[static_cast<std::size_t>(at(i, v))];
                    if (bv == 0)
                        continue;
                    auto& slot = r[static_cast<std::size_t>(at(i, u + v))];
                    slot = (slot + au * bv) % p;
                }
            }
        return r;
    }
};

// Reduce v modulo the span of rref rows (unit pivots).
FpVector fp_reduce(FpVector v, const std::vector<FpVector>& rref, long long p) {
    for (const auto& row : rref) {
        int pc = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) {
                pc = static_cast<int>(j);
                break;
            }
        if (pc < 0)
            continue;
        const long long f = v[static_cast<std::size_t>(pc)];
        if (f == 0)
            continue;
        for (std::size_t j = static_cast<std::size_t>(pc); j < v.size(); ++j)
            v[j] = ((v[j] - f * row[j]) % p + p) % p;
    }
    return v;
}

} // namespace

FiniteFieldCensus finite_field_census(const std::vector<ConditionRow>& conditions,
                                      const SemigroupData& s, int p,
                                      const std::vector<MultiIndex>& points) {
    const int d = s.branch_count();
    const MultiIndex& c = s.conductor();
    if (!is_prime(p))
        throw InputError("finite-field oracle needs a prime p");
    for (int i = 0; i < d; ++i)
        if (p < c[i])
            throw InputError("p = " + std::to_string(p) +
                             " too small (needs p >= c_i; the class of J may "
                             "degenerate below the conductor)");
    double budget = 1;
    for (int i = 0; i < d - 1; ++i)
        budget *= p - 1;
    for (int i = 0; i < s.delta() - d + 1; ++i)
        budget *= p;
    if (budget > 1e6)
        throw InputError("finite-field enumeration budget exceeded");

    FpJets jets(c);
    const int cols = jets.count();

    // Conditions mod p; they must stay independent (rank delta) or counting
    // formulas degenerate.
    std::vector<FpVector> rows;
    for (const auto& row : conditions) {
        FpVector r(static_cast<std::size_t>(cols), 0);
        for (const auto& term : row) {
            if (term.exp < 0 || term.exp >= c[term.branch])
                throw InputError("condition references exponent " +
                                 std::to_string(term.exp) +
                                 " at or beyond the conductor");
            auto& slot = r[static_cast<std::size_t>(jets.at(term.branch, term.exp))];
            slot = (slot + rational_mod_p(term.coeff, p)) % p;
        }
        rows.push_back(std::move(r));
    }
    const auto rref_rows = fp_rref(rows, p);
    if (static_cast<int>(rref_rows.size()) != s.delta())
        throw InputError("conditions lose rank mod " + std::to_string(p) +
                         "; choose a different prime");

    auto satisfies = [&](const FpVector& jet, const MultiIndex& n) {
        for (const auto& row : conditions) {
            long long acc = 0;
            for (const auto& term : row) {
                const int e = term.exp - n[term.branch];
                if (e < 0)
                    continue;
                acc = (acc + rational_mod_p(term.coeff, p) *
                                 jet[static_cast<std::size_t>(jets.at(term.branch, e))]) %
                      p;
            }
            if (acc % p != 0)
                return false;
        }
        return true;
    };

    // Jets of the maximal ideal of O mod t^c: kernel of the conditions plus
    // the vanishing of the branch-1 constant (all constants agree on O).
    std::vector<FpVector> ideal_rows = rows;
    if (cols > 0) {
        FpVector unit_row(static_cast<std::size_t>(cols), 0);
        unit_row[static_cast<std::size_t>(jets.at(0, 0))] = 1;
        ideal_rows.push_back(std::move(unit_row));
        // Sanity: the unit jet must solve the conditions and the kernel must
        // keep all constants equal, as for any local ring presented this way.
        FpVector unit(static_cast<std::size_t>(cols), 0);
        for (int i = 0; i < d; ++i)
            unit[static_cast<std::size_t>(jets.at(i, 0))] = 1;
        if (!satisfies(unit, MultiIndex::zero(d)))
            throw InputError("conditions reject the unit; not a ring mod " +
                             std::to_string(p));
        for (const auto& k : fp_kernel(rows, cols, p))
            for (int i = 1; i < d; ++i)
                if (k[static_cast<std::size_t>(jets.at(i, 0))] !=
                    k[static_cast<std::size_t>(jets.at(0, 0))])
                    throw InputError("conditions do not force equal constants mod " +
                                     std::to_string(p));
    }
    const auto m_basis = fp_kernel(ideal_rows, cols, p);

    // Enumerate unit jets with branch-1 constant 1, remaining constants in
    // F_p^x, all other coordinates free; every class is hit.
    std::vector<int> radix(static_cast<std::size_t>(cols), 0);
    for (int f = 0; f < cols; ++f) {
        auto [branch, exp] = jets.coords[static_cast<std::size_t>(f)];
        radix[static_cast<std::size_t>(f)] = exp == 0 ? (branch == 0 ? 1 : p - 1) : p;
    }
    double enumeration = 1;
    for (int f = 0; f < cols; ++f)
        enumeration *= radix[static_cast<std::size_t>(f)];
    if (enumeration > 1e7)
        throw InputError("finite-field enumeration budget exceeded");

    std::set<FpVector> classes;
    std::vector<int> digits(static_cast<std::size_t>(cols), 0);
    bool done = false;
    while (!done) {
        FpVector mu(static_cast<std::size_t>(cols), 0);
        for (int f = 0; f < cols; ++f) {
            auto [branch, exp] = jets.coords[static_cast<std::size_t>(f)];
            const int digit = digits[static_cast<std::size_t>(f)];
            mu[static_cast<std::size_t>(f)] = exp == 0 ? digit + 1 : digit;
        }
        // Canonical form of the class of mu: reduce modulo mu * m(O)-jets
        // (multiplication by units with constant 1 acts affinely).
        std::vector<FpVector> orbit;
        orbit.reserve(m_basis.size());
        for (const auto& b : m_basis)
            orbit.push_back(jets.mul(mu, b, p));
        const auto orbit_rref = fp_rref(orbit, p);
        classes.insert(fp_reduce(std::move(mu), orbit_rref, p));
        // Next assignment.
        int f = cols - 1;
        while (f >= 0 && digits[static_cast<std::size_t>(f)] ==
                             radix[static_cast<std::size_t>(f)] - 1) {
            digits[static_cast<std::size_t>(f)] = 0;
            --f;
        }
        if (f < 0)
            done = true;
        else
            ++digits[static_cast<std::size_t>(f)];
    }

    FiniteFieldCensus census;
    census.total_classes = static_cast<long long>(classes.size());
    for (const auto& n : points) {
        long long count = 0;
        for (const auto& mu : classes)
            if (satisfies(mu, n))
                ++count;
        census.counts[n] = count;
    }
    return census;
}

long long finite_field_ideal_count(const std::vector<ConditionRow>& conditions,
                                   const SemigroupData& s, const MultiIndex& n,
                                   int p) {
    return finite_field_census(conditions, s, p, {n}).counts.at(n);
}

CheckResult finite_field_check(const std::vector<ConditionRow>& conditions,
                               const SemigroupData& s, int p) {
    const int d = s.branch_count();
    std::vector<MultiIndex> points;
    for_each_in_box(MultiIndex::zero(d), s.conductor() + 1,
                    [&](const MultiIndex& n) { points.push_back(n); });
    FiniteFieldCensus census;
    try {
        census = finite_field_census(conditions, s, p, points);
    } catch (const InputError& e) {
        return CheckResult::failed("finite_field", e.what());
    }
    Int expected_total = 1;
    for (int i = 0; i < d - 1; ++i)
        expected_total *= p - 1;
    for (int i = 0; i < s.delta() - d + 1; ++i)
        expected_total *= p;
    if (Int(census.total_classes) != expected_total)
        return CheckResult::failed("finite_field",
                                   "#J = " + std::to_string(census.total_classes) +
                                       " != (p-1)^(d-1) p^(delta-d+1)");
    for (const auto& [n, count] : census.counts) {
        const Rational expected = class_In(s, n).eval(Rational(p));
        if (Rational(count) != expected && s.contains(n))
            return CheckResult::failed("finite_field",
                                       "#(I_n) != [I_n](p) at n = " + n.str());
        if (!s.contains(n) && count != 0)
            return CheckResult::failed("finite_field",
                                       "nonzero count off the semigroup at n = " +
                                           n.str());
    }
    return CheckResult::passed("finite_field");
}

std::vector<ConditionRow> gap_conditions(const SemigroupData& s) {
    if (s.branch_count() != 1)
        throw InputError("gap conditions are the d = 1 monomial presentation");
    std::vector<ConditionRow> rows;
    for (int g = 1; g < s.conductor()[0]; ++g)
        if (!s.contains(MultiIndex{g}))
            rows.push_back({{0, g, Rational(1)}});
    return rows;
}

} // namespace curvezeta

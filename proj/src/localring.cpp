#include "curvezeta/localring.hpp"

#include "curvezeta/errors.hpp"

#include <algorithm>
#include <deque>

namespace curvezeta {

JetCoordinates::JetCoordinates(MultiIndex truncation) : trunc_(std::move(truncation)) {
    if (trunc_.dim() < 1 || !trunc_.is_nonnegative())
        throw InputError("jet truncation must be non-negative");
    const int d = trunc_.dim();
    int max_exp = 0;
    for (int i = 0; i < d; ++i)
        max_exp = std::max(max_exp, trunc_[i]);
    index_.assign(static_cast<std::size_t>(d), {});
    for (int i = 0; i < d; ++i)
        index_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(trunc_[i]) + 1, -1);
    for (int e = 0; e <= max_exp; ++e)
        for (int i = 0; i < d; ++i)
            if (e <= trunc_[i]) {
                index_[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] =
                    static_cast<int>(coords_.size());
                coords_.emplace_back(i, e);
            }
}

int JetCoordinates::index_of(int branch, int exp) const {
    return index_[static_cast<std::size_t>(branch)][static_cast<std::size_t>(exp)];
}

QVector JetCoordinates::unit_jet() const {
    QVector v = zero();
    for (int i = 0; i < branch_count(); ++i)
        v[static_cast<std::size_t>(index_of(i, 0))] = 1;
    return v;
}

QVector JetCoordinates::pure_monomial(int branch, int exp) const {
    QVector v = zero();
    v[static_cast<std::size_t>(index_of(branch, exp))] = 1;
    return v;
}

QVector JetCoordinates::jet_of(const SeriesElement& s) const {
    if (s.branch_count() != branch_count())
        throw InputError("series branch count does not match jet space");
    QVector v = zero();
    for (int i = 0; i < branch_count(); ++i)
        for (const auto& [e, c] : s.branch_terms(i))
            if (e <= trunc_[i])
                v[static_cast<std::size_t>(index_of(i, e))] = c;
    return v;
}

QVector JetCoordinates::jet_mul(const QVector& a, const QVector& b) const {
    QVector r = zero();
    for (int i = 0; i < branch_count(); ++i) {
        const int n = trunc_[i];
        for (int u = 0; u <= n; ++u) {
            const Rational& au = a[static_cast<std::size_t>(index_of(i, u))];
            if (au == 0)
                continue;
            for (int v = 0; u + v <= n; ++v) {
                const Rational& bv = b[static_cast<std::size_t>(index_of(i, v))];
                if (bv == 0)
                    continue;
                r[static_cast<std::size_t>(index_of(i, u + v))] += au * bv;
            }
        }
    }
    return r;
}

LocalRingModel::LocalRingModel(Source source, JetCoordinates coords, RrefMatrix basis)
    : source_(std::move(source)), coords_(std::move(coords)), basis_(std::move(basis)),
      conductor_(coords_.branch_count()) {
    compute_invariants();
}

LocalRingModel LocalRingModel::from_generators(std::vector<SeriesElement> gens,
                                               const MultiIndex& truncation) {
    if (gens.empty())
        throw InputError("from_generators: empty generator list");
    JetCoordinates coords(truncation);
    const int d = coords.branch_count();
    std::vector<QVector> gen_jets;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].branch_count() != d)
            throw InputError("generator " + std::to_string(k + 1) +
                             " has wrong branch count");
        for (int i = 0; i < d; ++i)
            if (gens[k].branch_terms(i).empty())
                throw InputError("zero-divisor generator or precision too low: "
                                 "generator " + std::to_string(k + 1) +
                                 " vanishes on branch " + std::to_string(i + 1));
        gen_jets.push_back(coords.jet_of(gens[k]));
    }
    // Smallest subspace containing 1 and closed under multiplication by the
    // generators: the jet image of the generated unital subalgebra.
    RrefMatrix basis(coords.count());
    std::deque<QVector> work;
    basis.insert(coords.unit_jet());
    work.push_back(coords.unit_jet());
    while (!work.empty()) {
        QVector v = std::move(work.front());
        work.pop_front();
        for (const auto& g : gen_jets) {
            QVector p = basis.reduce(coords.jet_mul(g, v));
            if (!is_zero_vector(p)) {
                basis.insert(p);
                work.push_back(std::move(p));
            }
        }
    }
    return LocalRingModel(Source(std::move(gens)), std::move(coords), std::move(basis));
}

LocalRingModel LocalRingModel::from_conditions(std::vector<ConditionRow> rows, int d,
                                               const MultiIndex& truncation) {
    JetCoordinates coords(truncation);
    if (coords.branch_count() != d)
        throw InputError("truncation dimension does not match branch count");
    std::vector<QVector> condition_rows;
    for (const auto& row : rows) {
        QVector r = coords.zero();
        for (const auto& term : row) {
            if (term.branch < 0 || term.branch >= d)
                throw InputError("condition references branch " +
                                 std::to_string(term.branch + 1) + " of " +
                                 std::to_string(d));
            if (term.exp < 0 || term.exp > truncation[term.branch])
                throw InputError("condition references exponent " +
                                 std::to_string(term.exp) + " beyond the truncation");
            r[static_cast<std::size_t>(coords.index_of(term.branch, term.exp))] += term.coeff;
        }
        condition_rows.push_back(std::move(r));
    }
    RrefMatrix basis(coords.count());
    for (auto& v : null_space(std::move(condition_rows), coords.count()))
        basis.insert(std::move(v));
    // Eq-style presentations only define a ring when the kernel is closed
    // under truncated multiplication and contains the unit.
    if (!basis.contains(coords.unit_jet()))
        throw InputError("conditions not ring-compatible: 1 is not a solution");
    const auto& b = basis.rows();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j)
            if (!basis.contains(coords.jet_mul(b[i], b[j])))
                throw InputError("conditions not ring-compatible: product of basis "
                                 "jets leaves the solution space");
    return LocalRingModel(Source(std::move(rows)), std::move(coords), std::move(basis));
}

void LocalRingModel::compute_invariants() {
    const int d = coords_.branch_count();
    delta_ = coords_.count() - basis_.rank();
    for (int i = 0; i < d; ++i) {
        int largest_missing = -1;
        for (int e = 0; e <= truncation()[i]; ++e)
            if (!basis_.contains(coords_.pure_monomial(i, e)))
                largest_missing = e;
        if (largest_missing == truncation()[i])
            throw PrecisionError("conductor not visible within truncation on branch " +
                                 std::to_string(i + 1));
        conductor_[i] = largest_missing + 1;
    }
    // Eager l-table on [0, c+2] when the margin allows; semigroup_box
    // insists on that margin anyway.
    bool fits = true;
    for (int i = 0; i < d; ++i)
        if (conductor_[i] + 2 > truncation()[i] - 1)
            fits = false;
    if (fits)
        for_each_in_box(MultiIndex::zero(d), conductor_ + 2, [&](const MultiIndex& n) {
            l_cache_[n] = l_value(n);
        });
}

int LocalRingModel::l_value(const MultiIndex& n) const {
    const int d = coords_.branch_count();
    if (n.dim() != d)
        throw InputError("l_value query of wrong dimension");
    if (!n.is_nonnegative())
        throw InputError("l_value: n must be non-negative");
    for (int i = 0; i < d; ++i)
        if (n[i] > truncation()[i] - 1)
            throw PrecisionError("insufficient truncation for l" + n.str());
    if (auto it = l_cache_.find(n); it != l_cache_.end())
        return it->second;
    // l(n) = rank of the basis restricted to the coordinates below n.
    std::vector<int> cols;
    for (int f = 0; f < coords_.count(); ++f) {
        auto [branch, exp] = coords_.at(f);
        if (exp < n[branch])
            cols.push_back(f);
    }
    if (cols.empty())
        return 0;
    std::vector<QVector> restricted;
    restricted.reserve(static_cast<std::size_t>(basis_.rank()));
    for (const auto& row : basis_.rows()) {
        QVector r;
        r.reserve(cols.size());
        for (int f : cols)
            r.push_back(row[static_cast<std::size_t>(f)]);
        restricted.push_back(std::move(r));
    }
    return rank_of(std::move(restricted));
}

int LocalRingModel::step_dim(const MultiIndex& n, int i) const {
    const int s = l_value(n + MultiIndex::unit(coords_.branch_count(), i)) - l_value(n);
    if (s != 0 && s != 1)
        throw InternalError("step dimension " + std::to_string(s) + " at " + n.str());
    return s;
}

bool LocalRingModel::contains_valuation(const MultiIndex& n) const {
    for (int i = 0; i < coords_.branch_count(); ++i)
        if (step_dim(n, i) != 1)
            return false;
    return true;
}

SemigroupData LocalRingModel::semigroup_box() const {
    const int d = coords_.branch_count();
    for (int i = 0; i < d; ++i)
        if (conductor_[i] + 2 > truncation()[i] - 1)
            throw PrecisionError("insufficient truncation for the semigroup box "
                                 "(need N >= c+3)");
    std::set<MultiIndex> box;
    for_each_in_box(MultiIndex::zero(d), conductor_ + 1, [&](const MultiIndex& n) {
        if (contains_valuation(n))
            box.insert(n);
    });
    std::map<MultiIndex, int> l_table;
    for_each_in_box(MultiIndex::zero(d), conductor_ + 2, [&](const MultiIndex& n) {
        l_table[n] = l_value(n);
    });
    SemigroupData s(d, conductor_, delta_, std::move(box), std::move(l_table));
    s.validate();
    return s;
}

LocalRingModel LocalRingModel::rebuild_at(const MultiIndex& truncation) const {
    if (std::holds_alternative<std::vector<SeriesElement>>(source_))
        return from_generators(std::get<std::vector<SeriesElement>>(source_), truncation);
    return from_conditions(std::get<std::vector<ConditionRow>>(source_),
                           coords_.branch_count(), truncation);
}

StabilityReport LocalRingModel::stability_check() const {
    StabilityReport report;
    auto drift = [&](const std::string& msg) {
        report.stable = false;
        report.drifts.push_back(msg);
    };
    const MultiIndex doubled = truncation() + truncation() + 2;
    std::optional<LocalRingModel> rebuilt;
    try {
        rebuilt = rebuild_at(doubled);
    } catch (const PrecisionError& e) {
        drift(std::string("rebuild at doubled truncation failed: ") + e.what());
        return report;
    }
    const LocalRingModel& big = *rebuilt;
    if (big.conductor() != conductor_)
        drift("conductor " + conductor_.str() + " -> " + big.conductor().str() +
              " at doubled truncation");
    if (big.delta() != delta_)
        drift("delta " + std::to_string(delta_) + " -> " + std::to_string(big.delta()) +
              " at doubled truncation");
    if (!report.stable)
        return report;
    // Same c and delta; compare the l-table and the membership box on [0, c+1].
    const int d = coords_.branch_count();
    bool margin = true;
    for (int i = 0; i < d; ++i)
        if (conductor_[i] + 2 > truncation()[i] - 1)
            margin = false;
    if (!margin) {
        drift("base truncation leaves no margin for the semigroup box (need N >= c+3)");
        return report;
    }
    for_each_in_box(MultiIndex::zero(d), conductor_ + 1, [&](const MultiIndex& n) {
        if (l_value(n) != big.l_value(n))
            drift("l" + n.str() + " drifts at doubled truncation");
        if (contains_valuation(n) != big.contains_valuation(n))
            drift("membership of " + n.str() + " drifts at doubled truncation");
    });
    return report;
}

std::vector<ConditionRow> LocalRingModel::echelon_conditions() const {
    if (delta_ == 0)
        return {};
    // Restrict the basis to the (c-1)-jet coordinates, re-echelonize, and
    // take the null space: delta independent homogeneous conditions.
    std::vector<int> cols;
    for (int f = 0; f < coords_.count(); ++f) {
        auto [branch, exp] = coords_.at(f);
        if (exp < conductor_[branch])
            cols.push_back(f);
    }
    std::vector<QVector> restricted;
    for (const auto& row : basis_.rows()) {
        QVector r;
        for (int f : cols)
            r.push_back(row[static_cast<std::size_t>(f)]);
        restricted.push_back(std::move(r));
    }
    auto kernel = null_space(std::move(restricted), static_cast<int>(cols.size()));
    if (static_cast<int>(kernel.size()) != delta_)
        throw InternalError("echelon conditions: expected delta independent rows");
    JetCoordinates small(conductor_ + (-1));
    std::vector<ConditionRow> rows;
    for (const auto& y : kernel) {
        ConditionRow row;
        for (std::size_t k = 0; k < y.size(); ++k)
            if (y[k] != 0) {
                auto [branch, exp] = small.at(static_cast<int>(k));
                row.push_back({branch, exp, y[k]});
            }
        rows.push_back(std::move(row));
    }
    return rows;
}

LocalRingModel build_stable_model(const LocalRingModel::Source& source, int d,
                                  const std::optional<MultiIndex>& truncation) {
    auto build = [&](const MultiIndex& n) -> LocalRingModel {
        if (std::holds_alternative<std::vector<SeriesElement>>(source))
            return LocalRingModel::from_generators(
                std::get<std::vector<SeriesElement>>(source), n);
        return LocalRingModel::from_conditions(
            std::get<std::vector<ConditionRow>>(source), d, n);
    };
    if (truncation) {
        LocalRingModel model = build(*truncation);
        StabilityReport report = model.stability_check();
        if (!report.stable) {
            std::string msg = "model unstable at the requested truncation:";
            for (const auto& m : report.drifts)
                msg += " " + m + ";";
            throw PrecisionError(msg);
        }
        model.semigroup_box(); // enforce the margin before accepting
        return model;
    }
    MultiIndex n = MultiIndex::constant(d, 8);
    while (true) {
        bool ok = true;
        try {
            LocalRingModel model = build(n);
            model.semigroup_box();
            StabilityReport report = model.stability_check();
            if (report.stable)
                return model;
            ok = false;
        } catch (const PrecisionError&) {
            ok = false;
        }
        if (!ok) {
            n = n + n + 2;
            if (n.norm() > 512)
                throw PrecisionError("no stable model below the truncation cap ||N|| <= 512");
        }
    }
}

} // namespace curvezeta

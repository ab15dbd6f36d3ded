#include "curvezeta/valuesemigroup.hpp"

#include "curvezeta/errors.hpp"

#include <algorithm>
#include <numeric>

namespace curvezeta {

SemigroupData::SemigroupData(int d, MultiIndex conductor, int delta,
                             std::set<MultiIndex> box,
                             std::map<MultiIndex, int> l_table)
    : d_(d), c_(std::move(conductor)), delta_(delta), box_(std::move(box)),
      l_table_(std::move(l_table)) {}

SemigroupData SemigroupData::from_numerical_generators(const std::vector<int>& gens) {
    if (gens.empty())
        throw InputError("numerical semigroup needs at least one generator");
    for (int g : gens)
        if (g <= 0)
            throw InputError("numerical semigroup generators must be positive");
    int g = 0;
    for (int x : gens)
        g = std::gcd(g, x);
    if (g != 1)
        throw InputError("numerical semigroup generators have gcd " +
                         std::to_string(g) + " != 1 (delta infinite)");

    // Sieve membership until a run of min(gens) consecutive members shows up;
    // past that point every number is a member.
    const int gmin = *std::min_element(gens.begin(), gens.end());
    std::vector<bool> member{true}; // 0 in S
    int run = gmin == 1 ? 1 : 0;
    int n = 0;
    while (run < gmin) {
        ++n;
        bool in = false;
        for (int gen : gens)
            if (n >= gen && member[static_cast<std::size_t>(n - gen)]) {
                in = true;
                break;
            }
        member.push_back(in);
        run = in ? run + 1 : 0;
    }
    int frobenius = -1;
    for (int k = 0; k <= n; ++k)
        if (!member[static_cast<std::size_t>(k)])
            frobenius = k;
    const int c = frobenius + 1;
    int delta = 0;
    for (int k = 0; k < c; ++k)
        if (!member[static_cast<std::size_t>(k)])
            ++delta;

    auto in_s = [&](int k) {
        return k >= c || member[static_cast<std::size_t>(k)];
    };
    std::set<MultiIndex> box;
    for (int k = 0; k <= c + 1; ++k)
        if (in_s(k))
            box.insert(MultiIndex{k});
    std::map<MultiIndex, int> l_table;
    int count_below = 0;
    for (int k = 0; k <= c + 2; ++k) {
        l_table[MultiIndex{k}] = count_below; // l(n) = #{s in S : s < n}
        if (in_s(k))
            ++count_below;
    }
    SemigroupData s(1, MultiIndex{c}, delta, std::move(box), std::move(l_table));
    s.validate();
    return s;
}

SemigroupData SemigroupData::from_box(const MultiIndex& conductor,
                                      const std::vector<MultiIndex>& elements) {
    const int d = conductor.dim();
    if (d < 1)
        throw InputError("semigroup box needs dimension >= 1");
    if (!conductor.is_nonnegative())
        throw InputError("conductor must be non-negative");
    std::set<MultiIndex> box;
    for (const auto& n : elements) {
        if (n.dim() != d)
            throw InputError("semigroup element " + n.str() +
                             " has wrong dimension");
        if (!n.is_nonnegative() || !n.leq(conductor + 1))
            throw InputError("semigroup element " + n.str() +
                             " outside the box [0, c+1]");
        box.insert(n);
    }
    // The l-table needs step dimensions, which need a SemigroupData; build a
    // provisional one with delta 0, fill the table, then fix delta = ||c|| - l(c).
    SemigroupData provisional(d, conductor, 0, box, {});
    std::map<MultiIndex, int> l_table;
    for_each_in_box(MultiIndex::zero(d), conductor + 2, [&](const MultiIndex& n) {
        if (n == MultiIndex::zero(d)) {
            l_table[n] = 0;
            return;
        }
        int i = 0;
        while (n[i] == 0)
            ++i;
        const MultiIndex prev = n - MultiIndex::unit(d, i);
        l_table[n] = l_table.at(prev) + provisional.step_dim(prev, i);
    });
    const long long delta = conductor.norm() - l_table.at(conductor);
    SemigroupData s(d, conductor, static_cast<int>(delta), std::move(box),
                    std::move(l_table));
    s.validate();
    return s;
}

void SemigroupData::validate() const {
    if (d_ < 1)
        throw InputError("semigroup: dimension must be >= 1");
    if (c_.dim() != d_ || !c_.is_nonnegative())
        throw InputError("semigroup: bad conductor");
    if (box_.count(MultiIndex::zero(d_)) == 0)
        throw InputError("semigroup: 0 not in S");
    for (const auto& n : box_)
        if (n.dim() != d_ || !n.is_nonnegative() || !n.leq(c_ + 1))
            throw InputError("semigroup: element " + n.str() +
                             " outside the box [0, c+1]");
    // Conductor region: every n in [c, c+1] belongs to S.
    for_each_in_box(c_, c_ + 1, [&](const MultiIndex& n) {
        if (box_.count(n) == 0)
            throw InputError("semigroup: conductor property fails at " + n.str());
    });
    // Minimality of c: c - e_i must not have the conductor property, which by
    // capping reduces to c - e_i not in S.
    for (int i = 0; i < d_; ++i) {
        if (c_[i] == 0)
            continue;
        if (box_.count(c_ - MultiIndex::unit(d_, i)) != 0)
            throw InputError("semigroup: conductor not minimal on branch " +
                             std::to_string(i + 1));
    }
    // Min-closure (good-semigroup axiom; makes box queries decidable).
    for (const auto& a : box_)
        for (const auto& b : box_) {
            if (!(a < b))
                continue;
            if (box_.count(a.min(b)) == 0)
                throw InputError("semigroup: min-closure fails for " + a.str() +
                                 ", " + b.str());
        }
    // l-table coverage and consistency with delta.
    for_each_in_box(MultiIndex::zero(d_), c_ + 2, [&](const MultiIndex& n) {
        if (l_table_.count(n) == 0)
            throw InputError("semigroup: l-table missing " + n.str());
    });
    if (l_table_.at(MultiIndex::zero(d_)) != 0)
        throw InputError("semigroup: l(0) != 0");
    if (c_.norm() - l_table_.at(c_) != delta_)
        throw InputError("semigroup: delta != ||c|| - l(c)");
}

bool SemigroupData::contains(const MultiIndex& n) const {
    if (n.dim() != d_)
        throw InputError("membership query of wrong dimension");
    if (!n.is_nonnegative())
        return false;
    return box_.count(n.min(c_)) != 0;
}

int SemigroupData::step_dim(const MultiIndex& n, int i) const {
    if (n.dim() != d_ || i < 0 || i >= d_)
        throw InputError("step_dim query of wrong dimension");
    if (n[i] < 0)
        return 0;
    if (n[i] >= c_[i])
        return 1;
    // Witness search: s in S with s_i = n_i and s_j >= n_j off i. Any witness
    // caps into the box against max(n+, c+1) by min-closure, and lower bounds
    // clamp into [0, c_j] because coordinates at or above c_j can be raised.
    for (const auto& s : box_) {
        if (s[i] != n[i])
            continue;
        bool ok = true;
        for (int j = 0; j < d_ && ok; ++j) {
            if (j == i)
                continue;
            const int bound = std::min(std::max(n[j], 0), c_[j]);
            if (s[j] < bound)
                ok = false;
        }
        if (ok)
            return 1;
    }
    return 0;
}

int SemigroupData::l(const MultiIndex& n) const {
    if (n.dim() != d_)
        throw InputError("l query of wrong dimension");
    const MultiIndex np = n.clamped_nonnegative();
    const MultiIndex m = np.min(c_ + 1);
    // Steps from m up to np all happen at coordinates >= c_i + 1 > c_i, so
    // each contributes 1.
    return l_table_.at(m) + static_cast<int>((np - m).norm());
}

std::vector<MultiIndex> SemigroupData::under_conductor_elements() const {
    std::vector<MultiIndex> out;
    for (const auto& n : box_)
        if (n.strictly_less(c_))
            out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BSet> b_sets(const SemigroupData& s) {
    const int d = s.branch_count();
    std::vector<BSet> out;
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i))
                J.push_back(i);
        subsets.push_back(std::move(J));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    for (auto& J : subsets) {
        BSet bs;
        bs.J = J;
        MultiIndex lo = MultiIndex::zero(d);
        MultiIndex hi = s.conductor();
        for (int j : J) {
            lo[j] = s.conductor()[j];
            hi[j] = s.conductor()[j];
        }
        for (int j = 0; j < d; ++j)
            if (std::find(J.begin(), J.end(), j) == J.end())
                hi[j] = s.conductor()[j] - 1; // m_j < c_j off J
        for_each_in_box(lo, hi, [&](const MultiIndex& f) {
            if (s.contains(f))
                bs.f_values.push_back(f);
        });
        out.push_back(std::move(bs));
    }
    return out;
}

std::map<MultiIndex, HLabel> h_decomposition(const SemigroupData& s,
                                             const MultiIndex& bound) {
    const int d = s.branch_count();
    if (!s.conductor().leq(bound))
        throw InputError("h_decomposition: bound must dominate the conductor");
    std::map<MultiIndex, HLabel> labels;
    for_each_in_box(MultiIndex::zero(d), bound, [&](const MultiIndex& n) {
        if (!s.contains(n))
            return;
        HLabel lab;
        MultiIndex f = n;
        for (int j = 0; j < d; ++j)
            if (n[j] >= s.conductor()[j]) {
                lab.J.push_back(j);
                f[j] = s.conductor()[j];
            }
        lab.f = f;
        labels[n] = std::move(lab);
    });
    return labels;
}

std::map<MultiIndex, int> l_table_combinatorial(const SemigroupData& s) {
    const int d = s.branch_count();
    std::map<MultiIndex, int> table;
    for_each_in_box(MultiIndex::zero(d), s.conductor() + 2, [&](const MultiIndex& n) {
        if (n == MultiIndex::zero(d)) {
            table[n] = 0;
            return;
        }
        int i = 0;
        while (n[i] == 0)
            ++i;
        const MultiIndex prev = n - MultiIndex::unit(d, i);
        table[n] = table.at(prev) + s.step_dim(prev, i);
    });
    return table;
}

} // namespace curvezeta

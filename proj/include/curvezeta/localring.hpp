#pragma once

#include "curvezeta/multiindex.hpp"
#include "curvezeta/numeric.hpp"
#include "curvezeta/rref.hpp"
#include "curvezeta/series.hpp"
#include "curvezeta/valuesemigroup.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace curvezeta {

// Coordinates of the truncated jet space: one coordinate per (branch, exp)
// pair with 0 <= exp <= N_i, enumerated in graded order (exponent-major,
// branch index as tiebreak) so that echelon forms are reproducible.
class JetCoordinates {
public:
    explicit JetCoordinates(MultiIndex truncation);

    int count() const { return static_cast<int>(coords_.size()); }
    int branch_count() const { return trunc_.dim(); }
    const MultiIndex& truncation() const { return trunc_; }
    int index_of(int branch, int exp) const;
    std::pair<int, int> at(int flat) const { return coords_[static_cast<std::size_t>(flat)]; }

    QVector zero() const { return QVector(static_cast<std::size_t>(count()), Rational(0)); }
    QVector unit_jet() const;                       // 1 on every branch
    QVector pure_monomial(int branch, int exp) const;
    // Coefficients beyond the series' stored terms are taken as zero.
    QVector jet_of(const SeriesElement& s) const;
    // Branchwise truncated product; jets form a quotient ring.
    QVector jet_mul(const QVector& a, const QVector& b) const;

private:
    MultiIndex trunc_;
    std::vector<std::pair<int, int>> coords_;
    std::vector<std::vector<int>> index_;
};

struct ConditionTerm {
    int branch; // 0-based
    int exp;
    Rational coeff;
};
using ConditionRow = std::vector<ConditionTerm>;

struct StabilityReport {
    bool stable = true;
    std::vector<std::string> drifts;
};

// The jet-space avatar of the local ring O inside the truncated
// normalization: a reduced-echelon basis of pi_N(O), with the conductor,
// delta and the l-table read off by rank computations.
class LocalRingModel {
public:
    using Source = std::variant<std::vector<SeriesElement>, std::vector<ConditionRow>>;

    // Row space of the unital subalgebra generated by the jets of gens
    // (worklist closure under truncated multiplication).
    static LocalRingModel from_generators(std::vector<SeriesElement> gens,
                                          const MultiIndex& truncation);

    // Kernel of the condition rows inside the jet space; ring closure of the
    // kernel is validated, not assumed.
    static LocalRingModel from_conditions(std::vector<ConditionRow> rows, int d,
                                          const MultiIndex& truncation);

    const JetCoordinates& coords() const { return coords_; }
    const RrefMatrix& basis() const { return basis_; }
    const MultiIndex& truncation() const { return coords_.truncation(); }
    int branch_count() const { return coords_.branch_count(); }

    // l(n) = dim O / J_n(O); requires n_i <= N_i - 1 (margin 1).
    int l_value(const MultiIndex& n) const;
    // dim J_n / J_{n+e_i} in {0,1}; i is 0-based.
    int step_dim(const MultiIndex& n, int i) const;
    bool contains_valuation(const MultiIndex& n) const;

    int delta() const { return delta_; }
    const MultiIndex& conductor() const { return conductor_; }

    // Membership on [0, c+1], l-table on [0, c+2], validated.
    SemigroupData semigroup_box() const;

    // Rebuilds at truncation 2N+2 and compares delta, conductor, the l-table
    // on [0, c+1] and the membership box.
    StabilityReport stability_check() const;

    // Homogeneous rows cutting pi_{c-1}(O) out of the (c-1)-jet space: the
    // reduced-echelon null space of the basis restricted to exponents < c_i.
    // Exactly delta rows; input to the finite-field oracle.
    std::vector<ConditionRow> echelon_conditions() const;

    const Source& source() const { return source_; }

private:
    LocalRingModel(Source source, JetCoordinates coords, RrefMatrix basis);
    void compute_invariants();
    LocalRingModel rebuild_at(const MultiIndex& truncation) const;

    Source source_;
    JetCoordinates coords_;
    RrefMatrix basis_;
    MultiIndex conductor_;
    int delta_ = 0;
    std::map<MultiIndex, int> l_cache_; // filled eagerly on [0, c+2] when it fits
};

// Builds a model whose invariants are certified by the doubling stability
// check. With an explicit truncation the model is built exactly there and a
// failed check raises PrecisionError; otherwise the truncation starts at 8
// per branch and doubles (N -> 2N+2) until the check passes, hard cap
// ||N|| <= 512.
LocalRingModel build_stable_model(const LocalRingModel::Source& source, int d,
                                  const std::optional<MultiIndex>& truncation);

} // namespace curvezeta

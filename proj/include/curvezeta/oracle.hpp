#pragma once

#include "curvezeta/localring.hpp"
#include "curvezeta/motivic.hpp"
#include "curvezeta/valuesemigroup.hpp"
#include "curvezeta/zeta.hpp"

#include <map>
#include <vector>

namespace curvezeta {

// Partial sums of the defining zeta series, truncated at total degree D.
class TruncatedTPoly {
public:
    TruncatedTPoly(int d, int degree_bound);

    int d() const { return d_; }
    int degree_bound() const { return bound_; }
    const std::map<MultiIndex, UPoly>& terms() const { return terms_; }
    UPoly coeff(const MultiIndex& e) const;
    void add_term(const MultiIndex& e, const UPoly& c); // drops ||e|| > bound

    bool operator==(const TruncatedTPoly&) const = default;

private:
    int d_;
    int bound_;
    std::map<MultiIndex, UPoly> terms_;
};

// Term-by-term sum over n in S, ||n|| <= D, with the class of each n
// resolved through the box rules: [J] at or above the conductor, the
// stratum corner class on mixed strata, the direct class formula below.
TruncatedTPoly series_sum_oracle(const SemigroupData& s, int degree_bound);

// Geometric-series expansion of the closed form, truncated at total
// degree D.
TruncatedTPoly taylor_expand(const ZetaForm& z, int degree_bound);

// Exact coefficient comparison; the witness names the first mismatch.
CheckResult compare(const TruncatedTPoly& a, const TruncatedTPoly& b);

// Counts over F_p by explicit enumeration of the ideal-class group: the
// number of classes mu with t^n mu satisfying the membership conditions.
// Conditions are homogeneous rows on the coordinates (branch, exp < c_i);
// rational coefficients are reduced mod p. Requirements: p prime,
// p >= max c_i, (p-1)^{d-1} p^{delta-d+1} <= 1e6.
struct FiniteFieldCensus {
    long long total_classes = 0;
    std::map<MultiIndex, long long> counts;
};

FiniteFieldCensus finite_field_census(const std::vector<ConditionRow>& conditions,
                                      const SemigroupData& s, int p,
                                      const std::vector<MultiIndex>& points);

long long finite_field_ideal_count(const std::vector<ConditionRow>& conditions,
                                   const SemigroupData& s, const MultiIndex& n,
                                   int p);

// Census over the whole box [0, c+1] compared against the class formula at
// U = p, plus the total count against (p-1)^{d-1} p^{delta-d+1}.
CheckResult finite_field_check(const std::vector<ConditionRow>& conditions,
                               const SemigroupData& s, int p);

// Vanishing conditions a_g = 0 at the gaps: the monomial-curve presentation
// of a numerical semigroup (d = 1).
std::vector<ConditionRow> gap_conditions(const SemigroupData& s);

} // namespace curvezeta

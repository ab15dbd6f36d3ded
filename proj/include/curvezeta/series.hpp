#pragma once

#include "curvezeta/multiindex.hpp"
#include "curvezeta/numeric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace curvezeta {

// An element of the truncated normalization k[[t_1]] x ... x k[[t_d]]:
// one sparse exponent -> coefficient map per branch. Coefficients are
// tracked for exponents <= truncation()[i] on branch i; stored
// coefficients are never zero.
class SeriesElement {
public:
    SeriesElement(int branch_count, MultiIndex truncation);

    static SeriesElement constant(int branch_count, MultiIndex truncation,
                                  const Rational& value);
    // t_branch^exp on one branch, zero elsewhere.
    static SeriesElement monomial(int branch_count, MultiIndex truncation,
                                  int branch, int exp, const Rational& coeff);

    int branch_count() const { return static_cast<int>(branches_.size()); }
    const MultiIndex& truncation() const { return trunc_; }
    const std::map<int, Rational>& branch_terms(int i) const {
        return branches_[static_cast<std::size_t>(i)];
    }

    Rational coeff(int branch, int exp) const; // 0 if absent
    // Drops zero values and exponents beyond the truncation.
    void set_coeff(int branch, int exp, const Rational& value);

    bool is_zero() const;
    bool operator==(const SeriesElement&) const = default;

private:
    std::vector<std::map<int, Rational>> branches_;
    MultiIndex trunc_;
};

// Ring operations truncate to the componentwise minimum of the operand
// truncations. Branch-count mismatch is an error.
SeriesElement series_add(const SeriesElement& a, const SeriesElement& b);
SeriesElement series_sub(const SeriesElement& a, const SeriesElement& b);
SeriesElement series_mul(const SeriesElement& a, const SeriesElement& b);
SeriesElement series_scale(const SeriesElement& a, const Rational& c);
SeriesElement series_pow(const SeriesElement& a, int n);

// Per-branch least exponent with nonzero coefficient; nullopt where the
// branch is zero up to the truncation.
std::vector<std::optional<int>> valuation(const SeriesElement& a);

// Inverse of a unit (valuation 0 on every branch) up to the truncation.
SeriesElement invert_unit(const SeriesElement& a);

// b with b^n = a up to the truncation, by Newton iteration. Requires a to
// be a unit whose constant terms are exact n-th powers in Q; the constant
// term of b is the principal rational root.
SeriesElement nth_root(const SeriesElement& a, int n);

} // namespace curvezeta

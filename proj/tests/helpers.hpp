#pragma once

#include "curvezeta/localring.hpp"
#include "curvezeta/series.hpp"
#include "curvezeta/valuesemigroup.hpp"

#include <vector>

namespace curvezeta::testing {

inline SeriesElement mono1(int exp, const Rational& c = Rational(1), int trunc = 8) {
    return SeriesElement::monomial(1, MultiIndex{trunc}, 0, exp, c);
}

// The node: branch constants agree.
inline SemigroupData node_semigroup() {
    return SemigroupData::from_box(
        MultiIndex{1, 1},
        {MultiIndex{0, 0}, MultiIndex{1, 1}, MultiIndex{1, 2}, MultiIndex{2, 1},
         MultiIndex{2, 2}});
}

// The tacnode of y^2 = x^4 - x^5: S = {0} u {(1,1)} u {k >= (2,2)}.
inline SemigroupData tacnode_semigroup() {
    std::vector<MultiIndex> elements = {MultiIndex{0, 0}, MultiIndex{1, 1}};
    for_each_in_box(MultiIndex{2, 2}, MultiIndex{3, 3},
                    [&](const MultiIndex& n) { elements.push_back(n); });
    return SemigroupData::from_box(MultiIndex{2, 2}, elements);
}

// x^3 = y^2 union the transverse line y = x: branches (t^2, t^3) and (s, s).
inline std::vector<SeriesElement> cusp_line_generators(int trunc = 8) {
    MultiIndex n{trunc, trunc};
    SeriesElement x(2, n), y(2, n);
    x.set_coeff(0, 2, 1);
    x.set_coeff(1, 1, 1);
    y.set_coeff(0, 3, 1);
    y.set_coeff(1, 1, 1);
    return {x, y};
}

inline SemigroupData cusp_line_semigroup() {
    return LocalRingModel::from_generators(cusp_line_generators(), MultiIndex{8, 8})
        .semigroup_box();
}

// y^2 = x^4 - x^5 parametrized with sqrt branches, enough terms to rebuild
// at the doubled truncation.
inline std::vector<SeriesElement> tacnode_generators(int trunc = 18) {
    MultiIndex n{trunc, trunc};
    SeriesElement x(2, n), y(2, n);
    x.set_coeff(0, 1, 1);
    x.set_coeff(1, 1, 1);
    SeriesElement one_minus_t(2, n);
    one_minus_t.set_coeff(0, 0, 1);
    one_minus_t.set_coeff(0, 1, -1);
    one_minus_t.set_coeff(1, 0, 1);
    one_minus_t.set_coeff(1, 1, -1);
    SeriesElement root = nth_root(one_minus_t, 2);
    SeriesElement t_squared(2, n);
    t_squared.set_coeff(0, 2, 1);
    t_squared.set_coeff(1, 2, -1);
    y = series_mul(t_squared, root); // (t1^2 sqrt(1-t1), -t2^2 sqrt(1-t2))
    return {x, y};
}

} // namespace curvezeta::testing

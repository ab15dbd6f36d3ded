#include "curvezeta/errors.hpp"
#include "curvezeta/series.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace curvezeta;
using namespace curvezeta::testing;

TEST_CASE("series addition") {
    SUBCASE("additive inverse gives the zero series") {
        auto t = mono1(1);
        CHECK(series_add(t, mono1(1, Rational(-1))).is_zero());
    }
    SUBCASE("disjoint supports merge") {
        auto a = series_add(SeriesElement::constant(1, MultiIndex{8}, 1), mono1(2));
        auto sum = series_add(a, mono1(1));
        CHECK(sum.coeff(0, 0) == 1);
        CHECK(sum.coeff(0, 1) == 1);
        CHECK(sum.coeff(0, 2) == 1);
    }
    SUBCASE("branches are independent") {
        MultiIndex n{8, 8};
        auto a = SeriesElement::monomial(2, n, 0, 1, 1);
        auto b = SeriesElement::monomial(2, n, 1, 1, 1);
        auto sum = series_add(a, b);
        CHECK(sum.coeff(0, 1) == 1);
        CHECK(sum.coeff(1, 1) == 1);
    }
    SUBCASE("branch-count mismatch is an error") {
        CHECK_THROWS_AS(series_add(mono1(1), SeriesElement(2, MultiIndex{8, 8})),
                        InputError);
    }
    SUBCASE("truncation is the componentwise minimum") {
        auto a = mono1(5, 1, 8);
        auto b = mono1(6, 1, 5);
        CHECK(series_add(a, b).truncation() == MultiIndex{5});
        CHECK(series_add(a, b).coeff(0, 6) == 0);
    }
}

TEST_CASE("series multiplication") {
    SUBCASE("monomials add exponents and valuations") {
        auto p = series_mul(mono1(2), mono1(3));
        CHECK(p.coeff(0, 5) == 1);
        CHECK(valuation(p)[0] == 5);
    }
    SUBCASE("(1-t) times the geometric series is 1") {
        SeriesElement one_minus_t(1, MultiIndex{8});
        one_minus_t.set_coeff(0, 0, 1);
        one_minus_t.set_coeff(0, 1, -1);
        SeriesElement geo(1, MultiIndex{8});
        for (int k = 0; k <= 8; ++k)
            geo.set_coeff(0, k, 1);
        CHECK(series_mul(one_minus_t, geo) ==
              SeriesElement::constant(1, MultiIndex{8}, 1));
    }
    SUBCASE("branchwise product on d = 2") {
        MultiIndex n{8, 8};
        SeriesElement a(2, n), b(2, n);
        a.set_coeff(0, 1, 1);
        a.set_coeff(1, 0, 1);
        b.set_coeff(0, 0, 1);
        b.set_coeff(1, 1, 1);
        auto p = series_mul(a, b);
        CHECK(p.coeff(0, 1) == 1);
        CHECK(p.coeff(1, 1) == 1);
        auto v = valuation(p);
        CHECK(v[0] == 1);
        CHECK(v[1] == 1);
    }
    SUBCASE("valuations add under multiplication") {
        MultiIndex n{10, 10};
        SeriesElement a(2, n), b(2, n);
        a.set_coeff(0, 2, Rational(3, 2));
        a.set_coeff(0, 4, 1);
        a.set_coeff(1, 1, -1);
        b.set_coeff(0, 3, Rational(-1, 5));
        b.set_coeff(1, 2, 7);
        auto va = valuation(a), vb = valuation(b), vp = valuation(series_mul(a, b));
        for (int i = 0; i < 2; ++i)
            CHECK(*vp[i] == *va[i] + *vb[i]);
    }
    SUBCASE("ring laws up to shared truncation") {
        auto a = series_add(mono1(1), SeriesElement::constant(1, MultiIndex{8}, 2));
        auto b = series_add(mono1(2), mono1(3, Rational(1, 3)));
        auto c = mono1(1, Rational(-2));
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_add(a, b) == series_add(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, series_add(b, c)) ==
              series_add(series_mul(a, b), series_mul(a, c)));
    }
}

TEST_CASE("valuation") {
    CHECK(*valuation(series_add(mono1(2), mono1(3)))[0] == 2);
    CHECK_FALSE(valuation(SeriesElement(1, MultiIndex{8}))[0].has_value());
    // branch 2 of the tacnode's y starts at -t^2
    auto y = tacnode_generators()[1];
    CHECK(*valuation(y)[1] == 2);
    CHECK(y.coeff(1, 2) == -1);
}

TEST_CASE("invert_unit") {
    SUBCASE("1/(1+t) is the alternating series") {
        SeriesElement a(1, MultiIndex{8});
        a.set_coeff(0, 0, 1);
        a.set_coeff(0, 1, 1);
        auto b = invert_unit(a);
        for (int k = 0; k <= 8; ++k)
            CHECK(b.coeff(0, k) == (k % 2 == 0 ? 1 : -1));
        CHECK(series_mul(a, b) == SeriesElement::constant(1, MultiIndex{8}, 1));
    }
    SUBCASE("constants invert") {
        auto two = SeriesElement::constant(1, MultiIndex{8}, 2);
        CHECK(invert_unit(two).coeff(0, 0) == Rational(1, 2));
    }
    SUBCASE("branchwise on d = 2") {
        MultiIndex n{6, 6};
        SeriesElement a(2, n);
        a.set_coeff(0, 0, 1);
        a.set_coeff(0, 1, 1);
        a.set_coeff(1, 0, 1);
        auto b = invert_unit(a);
        CHECK(series_mul(a, b) == SeriesElement::constant(2, n, 1));
    }
    SUBCASE("non-units are rejected") {
        CHECK_THROWS_AS(invert_unit(mono1(1)), InputError);
    }
}

TEST_CASE("nth_root") {
    SUBCASE("sqrt of 1") {
        auto one = SeriesElement::constant(1, MultiIndex{8}, 1);
        CHECK(nth_root(one, 2) == one);
    }
    SUBCASE("sqrt(1-t) squares back") {
        SeriesElement a(1, MultiIndex{10});
        a.set_coeff(0, 0, 1);
        a.set_coeff(0, 1, -1);
        auto r = nth_root(a, 2);
        CHECK(r.coeff(0, 0) == 1);
        CHECK(r.coeff(0, 1) == Rational(-1, 2));
        CHECK(r.coeff(0, 2) == Rational(-1, 8));
        CHECK(r.coeff(0, 3) == Rational(-1, 16));
        CHECK(series_mul(r, r) == a);
    }
    SUBCASE("cube root of an exact cube") {
        SeriesElement x(1, MultiIndex{9});
        x.set_coeff(0, 0, 1);
        x.set_coeff(0, 1, 1);
        CHECK(nth_root(series_pow(x, 3), 3) == x);
    }
    SUBCASE("rejects constants that are not exact powers") {
        auto two = SeriesElement::constant(1, MultiIndex{8}, 2);
        CHECK_THROWS_AS(nth_root(two, 2), InputError);
        auto neg = SeriesElement::constant(1, MultiIndex{8}, -1);
        CHECK_THROWS_AS(nth_root(neg, 2), InputError);
        CHECK(nth_root(neg, 3).coeff(0, 0) == -1);
    }
    SUBCASE("rejects non-units") {
        CHECK_THROWS_AS(nth_root(mono1(2), 2), InputError);
    }
}

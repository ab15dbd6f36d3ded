#include "curvezeta/io.hpp"

#include "curvezeta/errors.hpp"
#include "curvezeta/zeta.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace curvezeta;
using namespace curvezeta::testing;

TEST_CASE("parse_input") {
    SUBCASE("numerical semigroup") {
        auto in = parse_input(
            R"({"mode":"numerical_semigroup","semigroup_generators":[2,3]})");
        CHECK(in.mode == InputDescription::Mode::numerical_semigroup);
        CHECK(in.semigroup_generators == std::vector<int>{2, 3});
    }
    SUBCASE("linear conditions") {
        auto in = parse_input(
            R"({"mode":"linear_conditions","branches":2,"truncation":[8,8],)"
            R"("conditions":[[[1,0,"1"],[2,0,"-1"]],[[1,1,"1"],[2,1,"-1"]]]})");
        CHECK(in.mode == InputDescription::Mode::linear_conditions);
        CHECK(in.branches == 2);
        REQUIRE(in.conditions.size() == 2);
        CHECK(in.conditions[0][0].branch == 0); // 1-based in JSON
        CHECK(in.conditions[0][1].coeff == -1);
        CHECK(*in.truncation == MultiIndex{8, 8});
    }
    SUBCASE("semigroup box") {
        auto in = parse_input(
            R"({"mode":"semigroup_box","conductor":[1,1],)"
            R"("elements":[[0,0],[1,1],[1,2],[2,1],[2,2]]})");
        CHECK(in.mode == InputDescription::Mode::semigroup_box);
        CHECK(in.conductor == MultiIndex{1, 1});
        CHECK(in.elements.size() == 5);
    }
    SUBCASE("parametrization with rational coefficients") {
        auto in = parse_input(
            R"({"mode":"parametrization","branches":1,)"
            R"("generators":[{"branches":[[[2,"1"],[3,"-1/2"]]]}]})");
        CHECK(in.generators.size() == 1);
        CHECK(in.generators[0].coeff(0, 3) == Rational(-1, 2));
    }
    SUBCASE("errors carry the field path") {
        CHECK_THROWS_WITH_AS(parse_input(R"({"mode":"bogus"})"),
                             doctest::Contains("unknown mode"), InputError);
        CHECK_THROWS_WITH_AS(parse_input(R"({"mode":"numerical_semigroup"})"),
                             doctest::Contains("semigroup_generators"), InputError);
        CHECK_THROWS_WITH_AS(
            parse_input(R"({"mode":"numerical_semigroup",)"
                        R"("semigroup_generators":[2,3],"extra":1})"),
            doctest::Contains("unknown field"), InputError);
        CHECK_THROWS_WITH_AS(
            parse_input(R"({"mode":"parametrization","branches":1,)"
                        R"("generators":[{"branches":[[[2,"1/0"]]]}]})"),
            doctest::Contains("malformed rational"), InputError);
        CHECK_THROWS_WITH_AS(
            parse_input(R"({"mode":"linear_conditions","branches":2,)"
                        R"("conditions":[[[3,0,"1"]]]})"),
            doctest::Contains("branch index"), InputError);
        CHECK_THROWS_AS(parse_input("not json"), InputError);
    }
}

TEST_CASE("resolve") {
    SUBCASE("numerical semigroup carries gap conditions for the oracle") {
        auto r = resolve(parse_input(
            R"({"mode":"numerical_semigroup","semigroup_generators":[2,3]})"));
        CHECK(r.semigroup.conductor() == MultiIndex{2});
        CHECK(r.ff_available);
        REQUIRE(r.ff_conditions.size() == 1);
        CHECK(r.ff_conditions[0][0].exp == 1);
    }
    SUBCASE("semigroup box has no ring presentation") {
        auto r = resolve(parse_input(
            R"({"mode":"semigroup_box","conductor":[1,1],)"
            R"("elements":[[0,0],[1,1],[1,2],[2,1],[2,2]]})"));
        CHECK_FALSE(r.ff_available);
        CHECK(r.semigroup == node_semigroup());
    }
    SUBCASE("parametrization builds a stable model") {
        auto r = resolve(parse_input(
            R"({"mode":"parametrization","branches":1,)"
            R"("generators":[{"branches":[[[2,"1"]]]},{"branches":[[[3,"1"]]]}]})"));
        REQUIRE(r.model.has_value());
        CHECK(r.model->conductor() == MultiIndex{2});
        CHECK(r.ff_available);
    }
}

TEST_CASE("text rendering") {
    SUBCASE("golden numerator lines") {
        auto node = universal_zeta(node_semigroup());
        CHECK(render_tpoly(node.num()) ==
              "1 - U^-1 T2 - U^-1 T1 + U^-1 T1 T2");
        auto cusp = universal_zeta(SemigroupData::from_numerical_generators({2, 3}));
        CHECK(render_zetaform(cusp) ==
              "(1 - U^-1 T + U^-1 T^2)/(1 - U^-1 T)");
    }
    SUBCASE("zero renders as 0") {
        CHECK(render_tpoly(TPoly(1)) == "0");
        CHECK(render_qpoly(QPoly(1)) == "0");
    }
    SUBCASE("multi-term coefficients are parenthesized, U-descending") {
        auto z = universal_zeta(tacnode_semigroup());
        const std::string s = render_tpoly(z.num());
        CHECK(s.find("(U^-1 + U^-2) T1 T2") != std::string::npos);
    }
    SUBCASE("specializations") {
        auto s = tacnode_semigroup();
        auto chi = specialize_u(single_variable(universal_zeta(s)), Rational(1));
        CHECK(render_rational_function(chi) == "1 + T^2");
        auto zc = cartier_local_factor(universal_zeta(s));
        CHECK(render_cartier(zc) ==
              "(1 - 2 T + (q + 1) T^2 - 2 q T^3 + q^2 T^4)/(1 - T)^2");
    }
}

TEST_CASE("json documents") {
    SUBCASE("the tacnode numerator keys U-exponent maps by T-exponents") {
        auto z = universal_zeta(tacnode_semigroup());
        auto j = zetaform_to_json(z);
        CHECK(j["numerator"]["2,2"] == nlohmann::json{{"-2", 1}});
        CHECK(j["denominator"] == nlohmann::json::array({1, 2}));
    }
    SUBCASE("zeta documents round-trip losslessly") {
        for (const auto& s : {node_semigroup(), tacnode_semigroup(),
                              cusp_line_semigroup()}) {
            auto z = universal_zeta(s);
            CHECK(zetaform_from_json(zetaform_to_json(z)) == z);
        }
    }
    SUBCASE("rendering is byte-stable across calls") {
        auto s = cusp_line_semigroup();
        ReportOptions opts;
        auto r1 = dump_json(report_to_json(run_report(s, opts)));
        auto r2 = dump_json(report_to_json(run_report(s, opts)));
        CHECK(r1 == r2);
    }
}

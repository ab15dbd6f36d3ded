#include "curvezeta/io.hpp"

#include "curvezeta/errors.hpp"
#include "curvezeta/oracle.hpp"

#include <fstream>
#include <set>
#include <sstream>

using nlohmann::json;

namespace curvezeta {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
    throw InputError("input error at " + path + ": " + reason);
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<int>();
}

MultiIndex get_multiindex(const json& j, const std::string& path, int d) {
    if (!j.is_array() || static_cast<int>(j.size()) != d)
        fail(path, "expected an array of " + std::to_string(d) + " integers");
    MultiIndex n(d);
    for (int i = 0; i < d; ++i)
        n[i] = get_int(j[static_cast<std::size_t>(i)],
                       path + "[" + std::to_string(i) + "]");
    return n;
}

Rational get_rational(const json& j, const std::string& path) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (!j.is_string())
        fail(path, "expected a rational as string \"p/q\" or an integer");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

void check_fields(const json& j, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : j.items())
        if (allowed.count(key) == 0)
            fail(key, "unknown field for the declared mode");
}

} // namespace

InputDescription parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("input is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail("$", "expected a JSON object");
    if (!j.contains("mode") || !j["mode"].is_string())
        fail("mode", "missing or not a string");
    const std::string mode = j["mode"].get<std::string>();

    InputDescription in;
    const std::set<std::string> common = {"mode", "expect_gorenstein", "plane_origin"};
    auto with = [&](std::initializer_list<std::string> extra) {
        std::set<std::string> allowed = common;
        allowed.insert(extra);
        check_fields(j, allowed);
    };

    if (j.contains("expect_gorenstein")) {
        if (!j["expect_gorenstein"].is_boolean())
            fail("expect_gorenstein", "expected a boolean");
        in.expect_gorenstein = j["expect_gorenstein"].get<bool>();
    }
    if (j.contains("plane_origin")) {
        if (!j["plane_origin"].is_boolean())
            fail("plane_origin", "expected a boolean");
        in.plane_origin = j["plane_origin"].get<bool>();
    }

    if (mode == "numerical_semigroup") {
        in.mode = InputDescription::Mode::numerical_semigroup;
        with({"semigroup_generators"});
        if (!j.contains("semigroup_generators") || !j["semigroup_generators"].is_array())
            fail("semigroup_generators", "missing or not an array");
        for (std::size_t k = 0; k < j["semigroup_generators"].size(); ++k)
            in.semigroup_generators.push_back(
                get_int(j["semigroup_generators"][k],
                        "semigroup_generators[" + std::to_string(k) + "]"));
        if (in.semigroup_generators.empty())
            fail("semigroup_generators", "must be nonempty");
        in.branches = 1;
        return in;
    }

    if (mode == "semigroup_box") {
        in.mode = InputDescription::Mode::semigroup_box;
        with({"conductor", "elements"});
        if (!j.contains("conductor"))
            fail("conductor", "missing");
        if (!j["conductor"].is_array() || j["conductor"].empty())
            fail("conductor", "expected a nonempty integer array");
        in.branches = static_cast<int>(j["conductor"].size());
        in.conductor = get_multiindex(j["conductor"], "conductor", in.branches);
        if (!j.contains("elements") || !j["elements"].is_array())
            fail("elements", "missing or not an array");
        for (std::size_t k = 0; k < j["elements"].size(); ++k)
            in.elements.push_back(get_multiindex(j["elements"][k],
                                                 "elements[" + std::to_string(k) + "]",
                                                 in.branches));
        return in;
    }

    if (mode == "linear_conditions" || mode == "parametrization") {
        if (!j.contains("branches"))
            fail("branches", "missing");
        in.branches = get_int(j["branches"], "branches");
        if (in.branches < 1)
            fail("branches", "must be >= 1");
        if (j.contains("truncation"))
            in.truncation = get_multiindex(j["truncation"], "truncation", in.branches);
    }

    if (mode == "linear_conditions") {
        in.mode = InputDescription::Mode::linear_conditions;
        with({"branches", "truncation", "conditions"});
        if (!j.contains("conditions") || !j["conditions"].is_array())
            fail("conditions", "missing or not an array");
        for (std::size_t r = 0; r < j["conditions"].size(); ++r) {
            const std::string rpath = "conditions[" + std::to_string(r) + "]";
            if (!j["conditions"][r].is_array())
                fail(rpath, "expected an array of [branch, exponent, coeff] triples");
            ConditionRow row;
            for (std::size_t t = 0; t < j["conditions"][r].size(); ++t) {
                const json& term = j["conditions"][r][t];
                const std::string tpath = rpath + "[" + std::to_string(t) + "]";
                if (!term.is_array() || term.size() != 3)
                    fail(tpath, "expected [branch, exponent, coeff]");
                const int branch = get_int(term[0], tpath + "[0]");
                if (branch < 1 || branch > in.branches)
                    fail(tpath + "[0]", "branch index out of range 1.." +
                                            std::to_string(in.branches));
                const int exp = get_int(term[1], tpath + "[1]");
                if (exp < 0)
                    fail(tpath + "[1]", "negative exponent");
                row.push_back({branch - 1, exp, get_rational(term[2], tpath + "[2]")});
            }
            in.conditions.push_back(std::move(row));
        }
        return in;
    }

    if (mode == "parametrization") {
        in.mode = InputDescription::Mode::parametrization;
        with({"branches", "truncation", "generators"});
        if (!j.contains("generators") || !j["generators"].is_array() ||
            j["generators"].empty())
            fail("generators", "missing or empty");
        for (std::size_t g = 0; g < j["generators"].size(); ++g) {
            const std::string gpath = "generators[" + std::to_string(g) + "]";
            const json& gen = j["generators"][g];
            if (!gen.is_object() || !gen.contains("branches") ||
                !gen["branches"].is_array() ||
                static_cast<int>(gen["branches"].size()) != in.branches)
                fail(gpath, "expected {\"branches\": [terms per branch] * " +
                                std::to_string(in.branches) + "}");
            // Term lists are taken literally; absent coefficients are zero.
            int max_exp = 0;
            for (std::size_t b = 0; b < gen["branches"].size(); ++b)
                for (const auto& term : gen["branches"][b])
                    if (term.is_array() && term.size() == 2 && term[0].is_number_integer())
                        max_exp = std::max(max_exp, term[0].get<int>());
            MultiIndex trunc = in.truncation
                                   ? in.truncation->max(MultiIndex::constant(in.branches, max_exp))
                                   : MultiIndex::constant(in.branches, max_exp);
            SeriesElement s(in.branches, trunc);
            for (std::size_t b = 0; b < gen["branches"].size(); ++b) {
                const std::string bpath = gpath + ".branches[" + std::to_string(b) + "]";
                if (!gen["branches"][b].is_array())
                    fail(bpath, "expected an array of [exponent, coeff] pairs");
                for (std::size_t t = 0; t < gen["branches"][b].size(); ++t) {
                    const json& term = gen["branches"][b][t];
                    const std::string tpath = bpath + "[" + std::to_string(t) + "]";
                    if (!term.is_array() || term.size() != 2)
                        fail(tpath, "expected [exponent, coeff]");
                    const int exp = get_int(term[0], tpath + "[0]");
                    if (exp < 0)
                        fail(tpath + "[0]", "negative exponent");
                    const Rational c = get_rational(term[1], tpath + "[1]");
                    s.set_coeff(static_cast<int>(b), exp,
                                s.coeff(static_cast<int>(b), exp) + c);
                }
            }
            in.generators.push_back(std::move(s));
        }
        return in;
    }

    fail("mode", "unknown mode '" + mode + "'");
}

InputDescription parse_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot open input file '" + path + "'");
    std::stringstream buffer;
    buffer << f.rdbuf();
    return parse_input(buffer.str());
}

ResolvedInput resolve(const InputDescription& input) {
    switch (input.mode) {
    case InputDescription::Mode::numerical_semigroup: {
        SemigroupData s = SemigroupData::from_numerical_generators(input.semigroup_generators);
        // Monomial-curve presentation: the gap coefficients vanish.
        std::vector<ConditionRow> rows = gap_conditions(s);
        return ResolvedInput{input, std::move(s), std::nullopt, std::move(rows), true};
    }
    case InputDescription::Mode::semigroup_box: {
        SemigroupData s = SemigroupData::from_box(input.conductor, input.elements);
        // No canonical ring for a bare box; the finite-field oracle is n/a.
        return ResolvedInput{input, std::move(s), std::nullopt, {}, false};
    }
    case InputDescription::Mode::linear_conditions: {
        LocalRingModel model = build_stable_model(
            LocalRingModel::Source(input.conditions), input.branches, input.truncation);
        SemigroupData s = model.semigroup_box();
        return ResolvedInput{input, std::move(s), std::move(model), input.conditions, true};
    }
    case InputDescription::Mode::parametrization: {
        LocalRingModel model = build_stable_model(
            LocalRingModel::Source(input.generators), input.branches, input.truncation);
        SemigroupData s = model.semigroup_box();
        std::vector<ConditionRow> rows = model.echelon_conditions();
        return ResolvedInput{input, std::move(s), std::move(model), std::move(rows), true};
    }
    }
    throw InternalError("unhandled input mode");
}

// ---- text rendering ------------------------------------------------------

namespace {

std::string t_monomial(const MultiIndex& e, int d) {
    std::string s;
    for (int i = 0; i < d; ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += " ";
        s += d == 1 ? "T" : "T" + std::to_string(i + 1);
        if (e[i] != 1)
            s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string u_monomial(int exp, const Int& coeff, bool with_sign) {
    // |coeff| U^exp, sign prepended by the caller unless with_sign.
    std::string s;
    Int a = coeff;
    if (with_sign && a < 0) {
        s += "-";
        a = -a;
    }
    const bool unit = a == 1;
    if (!unit || exp == 0)
        s += a.str();
    if (exp != 0) {
        if (!unit)
            s += " ";
        s += exp == 1 ? "U" : "U^" + std::to_string(exp);
    }
    return s;
}

} // namespace

std::string render_upoly(const UPoly& c) {
    if (c.is_zero())
        return "0";
    std::string s;
    bool first = true;
    // U-exponents descending.
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
        const auto& [exp, coeff] = *it;
        if (first) {
            s += u_monomial(exp, coeff, true);
            first = false;
        } else {
            s += coeff < 0 ? " - " : " + ";
            s += u_monomial(exp, coeff < 0 ? Int(-coeff) : coeff, false);
        }
    }
    return s;
}

std::string render_tpoly(const TPoly& p) {
    if (p.is_zero())
        return "0";
    std::vector<MultiIndex> order;
    for (const auto& [e, c] : p.terms())
        order.push_back(e);
    std::sort(order.begin(), order.end(), [](const MultiIndex& a, const MultiIndex& b) {
        if (a.norm() != b.norm())
            return a.norm() < b.norm();
        return a < b;
    });
    std::string s;
    bool first = true;
    for (const auto& e : order) {
        const UPoly& c = p.terms().at(e);
        const std::string mono = t_monomial(e, p.d());
        std::string piece;
        bool negative = false;
        if (c.terms().size() == 1) {
            const auto& [uexp, ucoeff] = *c.terms().begin();
            negative = ucoeff < 0;
            const Int mag = negative ? Int(-ucoeff) : ucoeff;
            if (mono.empty())
                piece = u_monomial(uexp, mag, false);
            else if (mag == 1 && uexp == 0)
                piece = mono;
            else
                piece = u_monomial(uexp, mag, false) + " " + mono;
        } else {
            piece = "(" + render_upoly(c) + ")";
            if (!mono.empty())
                piece += " " + mono;
        }
        if (first) {
            s += (negative ? "-" : "") + piece;
            first = false;
        } else {
            s += negative ? " - " : " + ";
            s += piece;
        }
    }
    return s;
}

std::string render_zetaform(const ZetaForm& z) {
    std::string den;
    for (int i = 0; i < z.d(); ++i) {
        const int m = z.den_mult()[static_cast<std::size_t>(i)];
        if (m == 0)
            continue;
        den += "(1 - U^-1 " + std::string(z.d() == 1 ? "T" : "T" + std::to_string(i + 1)) + ")";
        if (m > 1)
            den += "^" + std::to_string(m);
    }
    const std::string num = render_tpoly(z.num());
    if (den.empty())
        return num;
    return "(" + num + ")/" + (den.find(")(") != std::string::npos ? "(" + den + ")" : den);
}

std::string render_qpoly(const QPoly& p) {
    if (p.is_zero())
        return "0";
    std::vector<MultiIndex> order;
    for (const auto& [e, c] : p.terms())
        order.push_back(e);
    std::sort(order.begin(), order.end(), [](const MultiIndex& a, const MultiIndex& b) {
        if (a.norm() != b.norm())
            return a.norm() < b.norm();
        return a < b;
    });
    std::string s;
    bool first = true;
    for (const auto& e : order) {
        const Rational c = p.terms().at(e);
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        const std::string mono = t_monomial(e, p.d());
        std::string piece;
        if (mono.empty())
            piece = rational_to_string(mag);
        else if (mag == 1)
            piece = mono;
        else
            piece = rational_to_string(mag) + " " + mono;
        if (first) {
            s += (negative ? "-" : "") + piece;
            first = false;
        } else {
            s += negative ? " - " : " + ";
            s += piece;
        }
    }
    return s;
}

std::string render_rational_function(const RationalFunction& f) {
    std::string den;
    // Group equal factors.
    std::map<std::pair<int, Rational>, int> groups;
    for (const auto& factor : f.den())
        ++groups[{factor.var, factor.coeff}];
    for (const auto& [key, mult] : groups) {
        const auto& [var, coeff] = key;
        std::string tname = f.d() == 1 ? "T" : "T" + std::to_string(var + 1);
        std::string c = coeff == 1 ? "" : rational_to_string(coeff) + " ";
        den += "(1 - " + c + tname + ")";
        if (mult > 1)
            den += "^" + std::to_string(mult);
    }
    const std::string num = render_qpoly(f.num());
    if (den.empty())
        return num;
    return "(" + num + ")/" + (den.find(")(") != std::string::npos ? "(" + den + ")" : den);
}

std::string render_cartier(const CartierZeta& z) {
    // q stands for the symbolic cardinality; reuse the U machinery.
    std::string num = render_tpoly(z.num());
    std::string::size_type pos = 0;
    while ((pos = num.find('U', pos)) != std::string::npos)
        num.replace(pos, 1, "q");
    if (z.den_power() == 0)
        return num;
    std::string den = "(1 - T)";
    if (z.den_power() > 1)
        den += "^" + std::to_string(z.den_power());
    return "(" + num + ")/" + den;
}

// ---- JSON ----------------------------------------------------------------

namespace {

json upoly_to_json(const UPoly& c) {
    json j = json::object();
    for (const auto& [e, v] : c.terms())
        j[std::to_string(e)] = v.convert_to<long long>();
    return j;
}

UPoly upoly_from_json(const json& j) {
    UPoly c;
    for (const auto& [key, value] : j.items())
        c += UPoly::monomial(std::stoi(key), Int(value.get<long long>()));
    return c;
}

json tpoly_to_json(const TPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms())
        j[e.key()] = upoly_to_json(c);
    return j;
}

MultiIndex key_to_multiindex(const std::string& key) {
    std::vector<int> entries;
    std::string cur;
    for (char ch : key + ",") {
        if (ch == ',') {
            entries.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return MultiIndex(std::move(entries));
}

} // namespace

json zetaform_to_json(const ZetaForm& z) {
    json j;
    j["numerator"] = tpoly_to_json(z.num());
    json den = json::array();
    for (int i = 0; i < z.d(); ++i)
        for (int k = 0; k < z.den_mult()[static_cast<std::size_t>(i)]; ++k)
            den.push_back(i + 1);
    j["denominator"] = den;
    j["d"] = z.d();
    return j;
}

ZetaForm zetaform_from_json(const json& j) {
    const int d = j.at("d").get<int>();
    TPoly num(d);
    for (const auto& [key, value] : j.at("numerator").items())
        num.add_term(key_to_multiindex(key), upoly_from_json(value));
    std::vector<int> den(static_cast<std::size_t>(d), 0);
    for (const auto& v : j.at("denominator"))
        ++den[static_cast<std::size_t>(v.get<int>() - 1)];
    return ZetaForm(std::move(num), std::move(den));
}

json rational_function_to_json(const RationalFunction& f) {
    json j;
    json num = json::object();
    for (const auto& [e, c] : f.num().terms())
        num[e.key()] = rational_to_string(c);
    j["numerator"] = num;
    json den = json::array();
    for (const auto& factor : f.den())
        den.push_back({{"var", factor.var + 1},
                       {"coeff", rational_to_string(factor.coeff)}});
    j["denominator"] = den;
    j["d"] = f.d();
    return j;
}

json cartier_to_json(const CartierZeta& z) {
    json j;
    j["numerator"] = tpoly_to_json(z.num()); // U-exponent keys read as powers of q
    j["denominator_power"] = z.den_power();
    return j;
}

json semigroup_to_json(const SemigroupData& s) {
    json j;
    j["d"] = s.branch_count();
    j["conductor"] = s.conductor().entries();
    j["delta"] = s.delta();
    j["gorenstein"] = s.is_gorenstein();
    json box = json::array();
    for (const auto& n : s.box())
        box.push_back(n.entries());
    j["box"] = box;
    return j;
}

json check_to_json(const CheckResult& c) {
    json j;
    j["name"] = c.name;
    switch (c.status) {
    case CheckResult::Status::pass:
        j["status"] = c.expected_to_pass ? "pass" : "unexpected-pass";
        break;
    case CheckResult::Status::fail:
        j["status"] = c.expected_to_pass ? "fail" : "expected-fail";
        break;
    case CheckResult::Status::not_applicable:
        j["status"] = "n/a";
        break;
    }
    if (!c.witness.empty())
        j["witness"] = c.witness;
    return j;
}

json report_to_json(const ZetaReport& r) {
    json j;
    j["input"] = r.input;
    j["d"] = r.d;
    j["conductor"] = r.conductor.entries();
    j["delta"] = r.delta;
    j["gorenstein"] = r.gorenstein;
    j["zeta"] = zetaform_to_json(r.zeta);
    j["zeta_single"] = zetaform_to_json(r.single_var);
    j["poincare"] = zetaform_to_json(r.poincare);
    j["chi"] = rational_function_to_json(r.chi);
    if (r.plane_origin)
        j["monodromy_zeta"] = rational_function_to_json(r.chi);
    j["cartier"] = cartier_to_json(r.cartier);
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(check_to_json(c));
    j["checks"] = checks;
    return j;
}

std::string dump_json(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace curvezeta

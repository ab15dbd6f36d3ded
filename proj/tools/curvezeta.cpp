#include "curvezeta/errors.hpp"
#include "curvezeta/io.hpp"
#include "curvezeta/oracle.hpp"
#include "curvezeta/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

using namespace curvezeta;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheckFailure = 2;
constexpr int kExitPrecision = 3;

struct CommonOptions {
    std::string input_path;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("input", opts.input_path, "input JSON file")->required();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

void emit(const CommonOptions& opts, const std::string& text, const json& doc) {
    if (opts.format == "json")
        std::cout << dump_json(doc);
    else
        std::cout << text << "\n";
}

std::string status_string(const CheckResult& c) {
    switch (c.status) {
    case CheckResult::Status::pass:
        return c.expected_to_pass ? "pass" : "unexpected-pass";
    case CheckResult::Status::fail:
        return c.expected_to_pass ? "FAIL" : "expected-fail";
    case CheckResult::Status::not_applicable:
        return "n/a";
    }
    return "?";
}

int run(int argc, char** argv) {
    CLI::App app{"curvezeta: universal motivic zeta functions of curve "
                 "singularities"};
    app.require_subcommand(1);

    CommonOptions zeta_opts;
    bool zeta_single = false;
    CLI::App* zeta_cmd = app.add_subcommand("zeta", "universal zeta function");
    add_common(zeta_cmd, zeta_opts);
    zeta_cmd->add_flag("--single", zeta_single, "substitute T_i -> T");

    CommonOptions semigroup_opts;
    CLI::App* semigroup_cmd =
        app.add_subcommand("semigroup", "conductor, delta and the membership box");
    add_common(semigroup_cmd, semigroup_opts);

    CommonOptions poincare_opts;
    CLI::App* poincare_cmd =
        app.add_subcommand("poincare", "generalized Poincare series");
    add_common(poincare_cmd, poincare_opts);

    CommonOptions spec_opts;
    std::string spec_u = "1";
    bool spec_single = false;
    CLI::App* spec_cmd = app.add_subcommand(
        "specialize", "evaluate U (U=1, U=q symbolic, or U=q=<rational>)");
    add_common(spec_cmd, spec_opts);
    spec_cmd->add_option("--u", spec_u, "1 | q | q=<rational>")->required();
    spec_cmd->add_flag("--single", spec_single, "substitute T_i -> T");

    CommonOptions check_opts;
    bool chk_fe = false, chk_sym = false, chk_kiyek = false, chk_eles = false;
    bool chk_mono = false, chk_stability = false, chk_all = false;
    int oracle_degree = -1;
    int ff_prime = 0;
    CLI::App* check_cmd = app.add_subcommand("check", "run the theorem checkers");
    add_common(check_cmd, check_opts);
    check_cmd->add_flag("--functional-equation", chk_fe, "Gorenstein functional equation");
    check_cmd->add_flag("--symmetry", chk_sym, "numerator coefficient symmetry");
    check_cmd->add_flag("--kiyek", chk_kiyek, "step-dimension duality");
    check_cmd->add_flag("--eles", chk_eles, "l(c-n) - l(n) = delta - ||n||");
    check_cmd->add_flag("--monodromy-fe", chk_mono, "monodromy functional equation");
    check_cmd->add_flag("--stability", chk_stability, "truncation stability");
    check_cmd->add_option("--oracle-degree", oracle_degree,
                          "compare the closed form against the series sum up to this degree");
    check_cmd->add_option("--finite-field", ff_prime,
                          "compare counts over F_p against the class formulas");
    check_cmd->add_flag("--all", chk_all, "run everything applicable");

    CLI11_PARSE(app, argc, argv);

    const CommonOptions& opts = app.got_subcommand(zeta_cmd)        ? zeta_opts
                                : app.got_subcommand(semigroup_cmd) ? semigroup_opts
                                : app.got_subcommand(poincare_cmd)  ? poincare_opts
                                : app.got_subcommand(spec_cmd)      ? spec_opts
                                                                    : check_opts;

    ResolvedInput resolved = resolve(parse_input_file(opts.input_path));
    const SemigroupData& s = resolved.semigroup;

    if (app.got_subcommand(semigroup_cmd)) {
        json doc = semigroup_to_json(s);
        std::string text = "d = " + std::to_string(s.branch_count()) +
                           "\nconductor = " + s.conductor().str() +
                           "\ndelta = " + std::to_string(s.delta()) +
                           "\ngorenstein = " + (s.is_gorenstein() ? "yes" : "no") +
                           "\nS in [0, c+1] =";
        for (const auto& n : s.box())
            text += " " + n.str();
        emit(opts, text, doc);
        return kExitOk;
    }

    ZetaForm zeta = universal_zeta(s);

    if (app.got_subcommand(zeta_cmd)) {
        ZetaForm out = zeta_single ? single_variable(zeta) : zeta;
        emit(opts, "Z = " + render_zetaform(out), zetaform_to_json(out));
        return kExitOk;
    }

    if (app.got_subcommand(poincare_cmd)) {
        ZetaForm p = poincare_series(zeta, s.delta());
        emit(opts, "P = " + render_zetaform(p), zetaform_to_json(p));
        return kExitOk;
    }

    if (app.got_subcommand(spec_cmd)) {
        if (spec_u == "q") {
            // Symbolic q: the Cartier local factor, a single-variable object.
            CartierZeta zc = cartier_local_factor(zeta);
            emit(opts, render_cartier(zc), cartier_to_json(zc));
            return kExitOk;
        }
        Rational q;
        if (spec_u == "1")
            q = 1;
        else if (spec_u.rfind("q=", 0) == 0)
            q = rational_from_string(spec_u.substr(2));
        else
            throw InputError("--u expects 1, q, or q=<rational>");
        ZetaForm base = spec_single ? single_variable(zeta) : zeta;
        RationalFunction f = specialize_u(base, q);
        emit(opts, render_rational_function(f), rational_function_to_json(f));
        return kExitOk;
    }

    // check
    ReportOptions ropts;
    ropts.expect_gorenstein = resolved.description.expect_gorenstein;
    ropts.plane_origin = resolved.description.plane_origin.value_or(false);
    ropts.run_oracle = chk_all || oracle_degree >= 0;
    if (oracle_degree >= 0)
        ropts.oracle_degree = oracle_degree;
    if (ff_prime > 0)
        ropts.finite_field_prime = ff_prime;
    ZetaReport report = run_report(
        s, ropts, resolved.model ? &*resolved.model : nullptr,
        resolved.ff_available ? &resolved.ff_conditions : nullptr,
        opts.input_path);

    const bool select = chk_fe || chk_sym || chk_kiyek || chk_eles || chk_mono ||
                        chk_stability || oracle_degree >= 0 || ff_prime > 0;
    auto wanted = [&](const std::string& name) {
        if (chk_all || !select)
            return true;
        if (name == "functional_equation")
            return chk_fe;
        if (name == "coeff_symmetry")
            return chk_sym;
        if (name == "kiyek")
            return chk_kiyek;
        if (name == "eles")
            return chk_eles;
        if (name == "monodromy_fe")
            return chk_mono;
        if (name == "stability")
            return chk_stability;
        if (name == "series_oracle")
            return oracle_degree >= 0;
        if (name == "finite_field")
            return ff_prime > 0;
        return false; // structural checks only with --all or no selection
    };

    std::string text;
    json checks = json::array();
    bool all_ok = true;
    for (const auto& c : report.checks) {
        if (!wanted(c.name))
            continue;
        all_ok = all_ok && c.ok();
        if (!text.empty())
            text += "\n";
        text += "check " + c.name + ": " + status_string(c);
        if (!c.witness.empty())
            text += " (" + c.witness + ")";
        checks.push_back(check_to_json(c));
    }
    json doc;
    doc["input"] = opts.input_path;
    doc["checks"] = checks;
    emit(opts, text, doc);
    return all_ok ? kExitOk : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

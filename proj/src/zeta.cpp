#include "curvezeta/zeta.hpp"

#include "curvezeta/errors.hpp"
#include "curvezeta/oracle.hpp"

#include <algorithm>

namespace curvezeta {

namespace {

// Shared stratum walk; `top` supplies the conductor-stratum class so the
// definition-style and the theorem-style assemblies stay separate call
// paths. The middle stratum contributes [I_{f_J(m)}] U^{-||f_J(m)||}
// T^{f_J(m)} over prod_{i in J} (1 - U^-1 T_i): the form the rationality
// proof derives for Z_{H_{J,m}}, in which the unit-jet prefactor of the
// integral cancels against the normalization of Z. (The displayed version
// of the explicit formula keeps that prefactor; summing the defining
// series over the stratum shows it must cancel, and both brute-force
// oracles agree.)
ZetaForm assemble(const SemigroupData& s, const UPoly& top_class) {
    const int d = s.branch_count();
    const MultiIndex& c = s.conductor();
    ZetaForm total = ZetaForm::zero(d);

    // Stratum (a): n in S with n < c strictly, no denominator.
    TPoly under(d);
    for (const auto& n : s.under_conductor_elements())
        under.add_term(n, class_In(s, n).shifted(-static_cast<int>(n.norm())));
    total += ZetaForm(std::move(under), std::vector<int>(static_cast<std::size_t>(d), 0));

    // Stratum (b): proper nonempty J, m in B_J, denominator over J only.
    for (const auto& bs : b_sets(s)) {
        for (const auto& f : bs.f_values) {
            UPoly coeff = class_In(s, f).shifted(-static_cast<int>(f.norm()));
            std::vector<int> den(static_cast<std::size_t>(d), 0);
            for (int j : bs.J)
                den[static_cast<std::size_t>(j)] = 1;
            total += ZetaForm(TPoly::monomial(f, coeff), std::move(den));
        }
    }

    // Stratum (c): the conductor ideal, full denominator. This summand also
    // forces the canonical denominator on the total.
    total += ZetaForm(TPoly::monomial(c, top_class.shifted(-static_cast<int>(c.norm()))),
                      std::vector<int>(static_cast<std::size_t>(d), 1));
    return total;
}

} // namespace

ZetaForm universal_zeta(const SemigroupData& s) {
    const int d = s.branch_count();
    // Definition-style conductor class, written out directly.
    UPoly top = UPoly::u_minus_one().pow(d - 1).shifted(s.delta() - d + 1);
    return assemble(s, top);
}

ZetaForm universal_zeta_via_classes(const SemigroupData& s) {
    return assemble(s, class_J(s.delta(), s.branch_count()));
}

ZetaForm single_variable(const ZetaForm& z) {
    return z.substitute_single();
}

ZetaForm poincare_series(const ZetaForm& z, int delta) {
    return z.scaled(UPoly::u(-delta - 1));
}

RationalFunction specialize_u(const ZetaForm& z, const Rational& q) {
    if (q == 0)
        throw InputError("specialization at U = 0 is undefined");
    QPoly num(z.d());
    for (const auto& [e, c] : z.num().terms())
        num.add_term(e, c.eval(q));
    std::vector<LinearFactor> den;
    for (int i = 0; i < z.d(); ++i)
        for (int k = 0; k < z.den_mult()[static_cast<std::size_t>(i)]; ++k)
            den.push_back({i, Rational(1) / q});
    RationalFunction r(std::move(num), std::move(den));
    r.normalize();
    return r;
}

RationalFunction monodromy_zeta(const SemigroupData& s) {
    return specialize_u(single_variable(universal_zeta(s)), Rational(1));
}

CartierZeta cartier_local_factor(const ZetaForm& z) {
    // T_i -> T, then T -> qT undoes the q^-1 twist of the counting formula;
    // each factor (1 - U^-1 T) becomes (1 - T).
    ZetaForm single = z.substitute_single();
    CartierZeta zc(single.num().scale_vars_by_u(), single.den_mult()[0]);
    zc.normalize();
    return zc;
}

RationalFunction cartier_local_factor_at(const ZetaForm& z, const Rational& q) {
    return cartier_local_factor(z).at(q);
}

CheckResult check_functional_equation(const ZetaForm& z, const SemigroupData& s) {
    const int d = s.branch_count();
    const MultiIndex& c = s.conductor();
    const TPoly& m = z.num();
    for (const auto& [e, coeff] : m.terms())
        if (!e.leq(c))
            return CheckResult::failed("functional_equation",
                                       "numerator exponent " + e.str() +
                                           " exceeds the conductor " + c.str());
    // With M the canonical numerator, the identity cross-multiplies to
    //   M(UT) prod(T_i - 1) prod(T_i - U^-1)
    //     = U^{delta-d} T^c M(1/T) prod(1 - U T_i) prod(1 - T_i).
    TPoly lhs = m.scale_vars_by_u();
    TPoly rhs = m.reversed(c).scaled(UPoly::u(s.delta() - d));
    for (int i = 0; i < d; ++i) {
        TPoly t_minus_one(d);
        t_minus_one.add_term(MultiIndex::unit(d, i), UPoly::one());
        t_minus_one.add_term(MultiIndex::zero(d), -UPoly::one());
        TPoly t_minus_uinv(d);
        t_minus_uinv.add_term(MultiIndex::unit(d, i), UPoly::one());
        t_minus_uinv.add_term(MultiIndex::zero(d), UPoly::monomial(-1, -1));
        TPoly one_minus_ut(d);
        one_minus_ut.add_term(MultiIndex::zero(d), UPoly::one());
        one_minus_ut.add_term(MultiIndex::unit(d, i), -UPoly::u(1));
        TPoly one_minus_t(d);
        one_minus_t.add_term(MultiIndex::zero(d), UPoly::one());
        one_minus_t.add_term(MultiIndex::unit(d, i), -UPoly::one());
        lhs = lhs * t_minus_one * t_minus_uinv;
        rhs = rhs * one_minus_ut * one_minus_t;
    }
    TPoly diff = lhs - rhs;
    if (diff.is_zero())
        return CheckResult::passed("functional_equation");
    const auto& [e, coeff] = *diff.terms().begin();
    return CheckResult::failed("functional_equation",
                               "sides differ at T^" + e.str());
}

CheckResult check_coeff_symmetry(const ZetaForm& z, const SemigroupData& s) {
    const int d = s.branch_count();
    const MultiIndex& c = s.conductor();
    for (int i = 0; i < d; ++i)
        if (z.den_mult()[static_cast<std::size_t>(i)] != 1)
            throw InputError("coefficient symmetry needs the canonical denominator");
    const TPoly& m = z.num();
    for (const auto& [e, coeff] : m.terms())
        if (!e.leq(c))
            return CheckResult::failed("coeff_symmetry",
                                       "numerator exponent " + e.str() +
                                           " exceeds the conductor " + c.str());
    if (!(m.coeff(MultiIndex::zero(d)) == UPoly::one()))
        return CheckResult::failed("coeff_symmetry", "a_0 != 1");
    if (!(m.coeff(c) == UPoly::u(-s.delta())))
        return CheckResult::failed("coeff_symmetry", "a_c != U^-delta");
    if (m.degree() != c.norm())
        return CheckResult::failed("coeff_symmetry",
                                   "numerator degree " + std::to_string(m.degree()) +
                                       " != ||c|| = " + std::to_string(c.norm()));
    CheckResult out = CheckResult::passed("coeff_symmetry");
    for_each_in_box(MultiIndex::zero(d), c, [&](const MultiIndex& i) {
        if (out.status != CheckResult::Status::pass)
            return;
        const UPoly lhs = m.coeff(i);
        const UPoly rhs =
            m.coeff(c - i).shifted(s.delta() - static_cast<int>(i.norm()));
        if (!(lhs == rhs))
            out = CheckResult::failed("coeff_symmetry",
                                      "a_" + i.key() + " != a_" + (c - i).key() +
                                          " U^(delta-||i||)");
    });
    return out;
}

CheckResult check_kiyek(const SemigroupData& s) {
    if (!s.is_gorenstein())
        return CheckResult::na("kiyek", "input is not Gorenstein");
    const int d = s.branch_count();
    const MultiIndex& c = s.conductor();
    CheckResult out = CheckResult::passed("kiyek");
    for_each_in_box(MultiIndex::constant(d, -1), c + 1, [&](const MultiIndex& n) {
        if (out.status != CheckResult::Status::pass)
            return;
        for (int i = 0; i < d; ++i) {
            const MultiIndex dual = c - n - MultiIndex::unit(d, i);
            if (s.step_dim(n, i) + s.step_dim(dual, i) != 1) {
                out = CheckResult::failed("kiyek", "step(" + n.str() + "," +
                                                       std::to_string(i + 1) +
                                                       ") + step(" + dual.str() +
                                                       ") != 1");
                return;
            }
        }
    });
    return out;
}

CheckResult check_eles(const SemigroupData& s) {
    if (!s.is_gorenstein())
        return CheckResult::na("eles", "input is not Gorenstein");
    const int d = s.branch_count();
    const MultiIndex& c = s.conductor();
    CheckResult out = CheckResult::passed("eles");
    for_each_in_box(MultiIndex::zero(d), c, [&](const MultiIndex& n) {
        if (out.status != CheckResult::Status::pass)
            return;
        if (s.l(c - n) - s.l(n) != s.delta() - n.norm())
            out = CheckResult::failed("eles", "l(c-n) - l(n) != delta - ||n|| at n = " +
                                                  n.str());
    });
    return out;
}

CheckResult check_monodromy_fe(const RationalFunction& zeta_f, const SemigroupData& s) {
    if (!s.is_gorenstein())
        return CheckResult::na("monodromy_fe", "input is not Gorenstein");
    if (zeta_f.d() != 1)
        throw InputError("monodromy functional equation needs a single variable");
    const int d = s.branch_count();
    const long long w = s.conductor().norm() - d; // ||c - 1||
    const QPoly& p = zeta_f.num();
    const QPoly q = zeta_f.denominator_expanded();
    const long long dp = std::max<long long>(p.degree(), 0);
    const long long dq = std::max<long long>(q.degree(), 0);
    // zeta(T) = (-1)^d T^w zeta(1/T) cross-multiplies to
    //   P(T) Q~(T) T^k = sign P~(T) Q(T) T^{k + w + dq - dp} for k large.
    const QPoly phat = p.reversed_full(dp);
    const QPoly qhat = q.reversed_full(dq);
    const long long shift = w + dq - dp;
    QPoly lhs = p * qhat;
    QPoly rhs = phat * q;
    if (d % 2 == 1) {
        QPoly neg(1);
        for (const auto& [e, cc] : rhs.terms())
            neg.add_term(e, -cc);
        rhs = neg;
    }
    if (shift >= 0)
        rhs = rhs * QPoly::monomial(MultiIndex{static_cast<int>(shift)}, Rational(1));
    else
        lhs = lhs * QPoly::monomial(MultiIndex{static_cast<int>(-shift)}, Rational(1));
    if (lhs == rhs)
        return CheckResult::passed("monodromy_fe");
    return CheckResult::failed("monodromy_fe", "cross-multiplied sides differ");
}

bool ZetaReport::all_ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.ok(); });
}

ZetaReport run_report(const SemigroupData& s, const ReportOptions& options,
                      const LocalRingModel* model,
                      const std::vector<ConditionRow>* ff_conditions,
                      const std::string& input_name) {
    const int d = s.branch_count();
    const MultiIndex& c = s.conductor();
    const bool expect_gorenstein =
        options.expect_gorenstein.value_or(s.is_gorenstein());

    ZetaForm zeta = universal_zeta(s);
    ZetaForm single = single_variable(zeta);
    ZetaReport report{input_name,
                      d,
                      c,
                      s.delta(),
                      s.is_gorenstein(),
                      options.plane_origin,
                      zeta,
                      single,
                      poincare_series(zeta, s.delta()),
                      specialize_u(single, Rational(1)),
                      cartier_local_factor(zeta),
                      {}};
    auto& checks = report.checks;

    // Assembly guard: Definition-style vs Theorem-style classes.
    checks.push_back(universal_zeta_via_classes(s).equals(zeta)
                         ? CheckResult::passed("assembly_agreement")
                         : CheckResult::failed("assembly_agreement",
                                               "the two assemblies differ"));

    // Degree bound and the evaluation identities.
    checks.push_back(zeta.num().degree() <= c.norm()
                         ? CheckResult::passed("degree_bound")
                         : CheckResult::failed("degree_bound",
                                               "numerator degree exceeds ||c||"));
    const UPoly j_class = class_J(s.delta(), d);
    checks.push_back(zeta.num().eval_at_u() == j_class
                         ? CheckResult::passed("numerator_at_U_is_class_J")
                         : CheckResult::failed("numerator_at_U_is_class_J",
                                               "M(U,...,U) != [J]"));
    checks.push_back(single.num().eval_at_u() == j_class
                         ? CheckResult::passed("single_numerator_at_U_is_class_J")
                         : CheckResult::failed("single_numerator_at_U_is_class_J",
                                               "R(U) != [J]"));
    checks.push_back(report.poincare.num().eval_at_u() ==
                             j_class.shifted(-s.delta() - 1)
                         ? CheckResult::passed("poincare_at_U")
                         : CheckResult::failed("poincare_at_U",
                                               "Q(U,...,U) != U^{-delta-1}[J]"));

    // At or above the conductor every ideal class survives: [I_n] = [J].
    {
        CheckResult r = CheckResult::passed("class_constancy_above_conductor");
        for_each_in_box(c, c + 1, [&](const MultiIndex& n) {
            if (r.status == CheckResult::Status::pass && !(class_In(s, n) == j_class))
                r = CheckResult::failed("class_constancy_above_conductor",
                                        "[I_n] != [J] at " + n.str());
        });
        checks.push_back(std::move(r));
    }

    // H-decomposition partitions [0, c+1] n S.
    {
        CheckResult r = CheckResult::passed("h_partition");
        auto labels = h_decomposition(s, c + 1);
        for_each_in_box(MultiIndex::zero(d), c + 1, [&](const MultiIndex& n) {
            const bool in_s = s.contains(n);
            if (in_s != (labels.count(n) != 0))
                r = CheckResult::failed("h_partition", "label/membership mismatch at " +
                                                           n.str());
        });
        checks.push_back(std::move(r));
    }

    // Functional-equation family, gated by the declared expectation.
    CheckResult fe = check_functional_equation(zeta, s);
    fe.expected_to_pass = expect_gorenstein;
    checks.push_back(std::move(fe));
    CheckResult sym = check_coeff_symmetry(zeta, s);
    sym.expected_to_pass = expect_gorenstein;
    checks.push_back(std::move(sym));
    checks.push_back(check_kiyek(s));
    checks.push_back(check_eles(s));
    CheckResult mfe = check_monodromy_fe(report.chi, s);
    if (mfe.status != CheckResult::Status::not_applicable)
        mfe.expected_to_pass = expect_gorenstein;
    checks.push_back(std::move(mfe));

    // Series oracle.
    if (options.run_oracle) {
        const int degree =
            options.oracle_degree.value_or(static_cast<int>(c.norm()) + 5);
        CheckResult r = compare(taylor_expand(zeta, degree),
                                series_sum_oracle(s, degree));
        r.name = "series_oracle";
        checks.push_back(std::move(r));
    }

    // Model-backed checks.
    if (model != nullptr) {
        CheckResult agree = CheckResult::passed("l_table_agreement");
        const auto combinatorial = l_table_combinatorial(s);
        for (const auto& [n, value] : combinatorial)
            if (agree.status == CheckResult::Status::pass &&
                s.l_table().at(n) != value)
                agree = CheckResult::failed("l_table_agreement",
                                            "linear-algebra and combinatorial l differ at " +
                                                n.str());
        checks.push_back(std::move(agree));
        StabilityReport stability = model->stability_check();
        checks.push_back(stability.stable
                             ? CheckResult::passed("stability")
                             : CheckResult::failed("stability",
                                                   stability.drifts.front()));
    }

    // Finite-field oracle.
    if (options.finite_field_prime) {
        const int p = *options.finite_field_prime;
        if (ff_conditions == nullptr)
            checks.push_back(CheckResult::na(
                "finite_field", "no ring presentation available for this input"));
        else
            checks.push_back(finite_field_check(*ff_conditions, s, p));
    }

    return report;
}

} // namespace curvezeta

#pragma once

#include "curvezeta/localring.hpp"
#include "curvezeta/motivic.hpp"
#include "curvezeta/valuesemigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvezeta {

// The universal zeta function of S: three strata over the common
// denominator prod_i (1 - U^-1 T_i):
//   (a) sum over n in S, 0 <= n < c (strict) of [I_n](U) U^{-||n||} T^n,
//   (b) for each proper nonempty J and m in B_J, the coefficient
//       (U-1) U^{||c||-delta-1} [I_{f_J(m)}](U) U^{-||c||-||f_J(m)||} on
//       T^{f_J(m)} over prod_{i in J} (1 - U^-1 T_i),
//   (c) (U-1)^{d-1} U^{delta-d+1} U^{-||c||} T^c over the full product.
ZetaForm universal_zeta(const SemigroupData& s);

// The same sum assembled through the closed-form class operations
// (class_In / class_units_jet / class_J); a transcription guard, asserted
// equal to universal_zeta in the report and the tests.
ZetaForm universal_zeta_via_classes(const SemigroupData& s);

// Z(T) = Z(T,...,T).
ZetaForm single_variable(const ZetaForm& z);

// P = U^{-delta-1} Z.
ZetaForm poincare_series(const ZetaForm& z, int delta);

// Evaluate U at a nonzero rational (U = 1 gives the Euler-characteristic
// specialization); denominator factors become (1 - q^-1 T_i), cancelled
// exactly.
RationalFunction specialize_u(const ZetaForm& z, const Rational& q);

// specialize_u(single_variable(universal_zeta(S)), 1).
RationalFunction monodromy_zeta(const SemigroupData& s);

// Z_Ca(T) with q symbolic: substitute T_i -> T, U -> q, then T -> qT; the
// denominator becomes (1 - T)^d.
CartierZeta cartier_local_factor(const ZetaForm& z);
RationalFunction cartier_local_factor_at(const ZetaForm& z, const Rational& q);

struct CheckResult {
    enum class Status { pass, fail, not_applicable };
    std::string name;
    Status status = Status::pass;
    std::string witness;
    bool expected_to_pass = true; // set false for Gorenstein-gated checks on
                                  // inputs declared non-Gorenstein

    static CheckResult passed(std::string name) {
        return {std::move(name), Status::pass, "", true};
    }
    static CheckResult failed(std::string name, std::string witness) {
        return {std::move(name), Status::fail, std::move(witness), true};
    }
    static CheckResult na(std::string name, std::string why) {
        return {std::move(name), Status::not_applicable, std::move(why), true};
    }

    // A check is in order when it matches its expectation.
    bool ok() const {
        if (status == Status::not_applicable)
            return true;
        return (status == Status::pass) == expected_to_pass;
    }
};

// Z(UT_1,...,UT_d,U,S) = U^{delta-d} T^{c-1} prod(1-UT_i)/prod(T_i-1)
//                        * Z(T_1^-1,...,T_d^-1,U,S),
// compared after clearing all T^-1 by cross-multiplication. Runs on any
// input; expected to hold exactly for Gorenstein S.
CheckResult check_functional_equation(const ZetaForm& z, const SemigroupData& s);

// Numerator coefficients: a_0 = 1, a_c = U^{-delta}, a_i = a_{c-i} U^{delta-||i||},
// degree = ||c||. Requires the canonical (full) denominator.
CheckResult check_coeff_symmetry(const ZetaForm& z, const SemigroupData& s);

// step(n,i) + step(c-n-e_i,i) = 1 over n in [-1, c+1]; Gorenstein only.
CheckResult check_kiyek(const SemigroupData& s);

// l(c-n) - l(n) = delta - ||n|| over n in [0, c]; Gorenstein only.
CheckResult check_eles(const SemigroupData& s);

// zeta(T) = (-1)^d T^{||c-1||} zeta(T^-1) for the U=1 specialization;
// Gorenstein only.
CheckResult check_monodromy_fe(const RationalFunction& zeta_f, const SemigroupData& s);

struct ReportOptions {
    std::optional<bool> expect_gorenstein;
    bool plane_origin = false;
    std::optional<int> oracle_degree; // default ||c|| + 5
    std::optional<int> finite_field_prime;
    bool run_oracle = true;
};

struct ZetaReport {
    std::string input;
    int d;
    MultiIndex conductor;
    int delta;
    bool gorenstein;
    bool plane_origin;
    ZetaForm zeta;
    ZetaForm single_var;
    ZetaForm poincare;
    RationalFunction chi; // U = 1, single variable
    CartierZeta cartier;
    std::vector<CheckResult> checks;

    bool all_ok() const; // every check matches its expectation
};

// Runs the full pipeline and every applicable check. The model, when
// present, contributes the l-table agreement, stability and finite-field
// checks.
ZetaReport run_report(const SemigroupData& s, const ReportOptions& options,
                      const LocalRingModel* model = nullptr,
                      const std::vector<ConditionRow>* ff_conditions = nullptr,
                      const std::string& input_name = "");

} // namespace curvezeta

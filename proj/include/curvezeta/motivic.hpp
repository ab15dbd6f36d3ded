#pragma once

#include "curvezeta/multiindex.hpp"
#include "curvezeta/numeric.hpp"
#include "curvezeta/valuesemigroup.hpp"

#include <map>
#include <optional>
#include <vector>

namespace curvezeta {

// Z[U, U^-1]: the sub-algebra of the localized Grothendieck ring that every
// class in the closed formulas lands in. U stands for the class of the
// affine line.
class UPoly {
public:
    UPoly() = default; // zero
    static UPoly zero() { return {}; }
    static UPoly one() { return monomial(0, 1); }
    static UPoly u(int exp = 1) { return monomial(exp, 1); }
    static UPoly constant(const Int& c) { return monomial(0, c); }
    static UPoly monomial(int exp, const Int& coeff);
    static UPoly u_minus_one(); // U - 1

    bool is_zero() const { return terms_.empty(); }
    Int coeff(int exp) const;
    int min_exp() const; // throws on zero
    int max_exp() const;
    const std::map<int, Int>& terms() const { return terms_; }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Int& c) const;
    UPoly shifted(int exp) const; // * U^exp
    UPoly pow(int k) const;       // k >= 0

    // Exact division; a nonzero remainder means a violated divisibility
    // invariant and throws InternalError.
    UPoly divide_exact(const UPoly& divisor) const;

    Rational eval(const Rational& q) const; // q != 0
    Int eval_one() const;

    bool operator==(const UPoly&) const = default;

private:
    void set(int exp, const Int& c);
    std::map<int, Int> terms_; // exponent -> nonzero coefficient
};

// [I_n](U) = (U-1)^{-1} U^{||n||+1} sum_{I subset I_0} (-1)^{#I} U^{-l(n+1_I)}.
// The alternating sum always evaluates to 0 at U = 1, so the division is
// exact; it is asserted anyway.
UPoly class_In(const SemigroupData& s, const MultiIndex& n);

// [J] = (U-1)^{d-1} U^{delta-d+1}.
UPoly class_J(int delta, int d);

// [pi_{c-1}(O^x)] = (U-1) U^{||c||-delta-1}; for c = 0 the units of the
// 0-jet give U-1.
UPoly class_units_jet(int delta, const MultiIndex& c);

// Polynomials in T_1..T_d with UPoly coefficients.
class TPoly {
public:
    explicit TPoly(int d) : d_(d) {}
    static TPoly monomial(const MultiIndex& e, UPoly c);
    static TPoly one(int d) { return monomial(MultiIndex::zero(d), UPoly::one()); }

    int d() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    long long degree() const; // max ||e||; -1 for the zero polynomial
    UPoly coeff(const MultiIndex& e) const;
    const std::map<MultiIndex, UPoly>& terms() const { return terms_; }
    void add_term(const MultiIndex& e, const UPoly& c);

    TPoly& operator+=(const TPoly& o);
    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly scaled(const UPoly& c) const;
    TPoly scaled_monomial(const UPoly& c, const MultiIndex& e) const;

    TPoly substitute_single() const;    // T_i -> T (result has d = 1)
    UPoly eval_at_u() const;            // T_i = U
    TPoly scale_vars_by_u() const;      // T_i -> U T_i
    TPoly reversed(const MultiIndex& c) const; // T^c P(1/T); needs exps <= c

    bool operator==(const TPoly&) const = default;

private:
    int d_;
    std::map<MultiIndex, UPoly> terms_;
};

// 1 - U^-1 T_var.
TPoly denominator_factor(int d, int var);

// Synthetic division by (1 - U^-1 T_var); nullopt when not exact.
std::optional<TPoly> divide_by_denominator_factor(const TPoly& p, int var);

// numerator / prod_i (1 - U^-1 T_i)^{mult_i}.
class ZetaForm {
public:
    ZetaForm(TPoly num, std::vector<int> den_mult);
    static ZetaForm zero(int d);

    int d() const { return num_.d(); }
    const TPoly& num() const { return num_; }
    const std::vector<int>& den_mult() const { return den_; }
    TPoly denominator_expanded() const;

    ZetaForm& operator+=(const ZetaForm& o);
    ZetaForm scaled(const UPoly& c) const;
    ZetaForm scaled_monomial(const UPoly& c, const MultiIndex& e) const;

    // Cancels denominator factors that divide the numerator exactly.
    void normalize();
    // Cross-multiplied comparison; insensitive to normalization.
    bool equals(const ZetaForm& o) const;

    ZetaForm substitute_single() const;

    bool operator==(const ZetaForm&) const = default;

private:
    TPoly num_;
    std::vector<int> den_;
};

// Polynomials over Q in T_1..T_d, for specialized zeta functions.
class QPoly {
public:
    explicit QPoly(int d) : d_(d) {}
    static QPoly monomial(const MultiIndex& e, const Rational& c);
    static QPoly one(int d) { return monomial(MultiIndex::zero(d), Rational(1)); }

    int d() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    long long degree() const;
    Rational coeff(const MultiIndex& e) const;
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }
    void add_term(const MultiIndex& e, const Rational& c);

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly substitute_single() const;
    QPoly reversed_full(long long degree) const; // T^degree P(1/T), d = 1 only

    bool operator==(const QPoly&) const = default;

private:
    int d_;
    std::map<MultiIndex, Rational> terms_;
};

// (1 - coeff T_var).
struct LinearFactor {
    int var;
    Rational coeff;
    bool operator==(const LinearFactor&) const = default;
};

// A specialized zeta value: numerator over a product of linear factors,
// compared by cross-multiplication.
class RationalFunction {
public:
    RationalFunction(QPoly num, std::vector<LinearFactor> den);
    static RationalFunction from_poly(QPoly num) { return {std::move(num), {}}; }

    int d() const { return num_.d(); }
    const QPoly& num() const { return num_; }
    const std::vector<LinearFactor>& den() const { return den_; }
    QPoly denominator_expanded() const;

    void normalize(); // cancel factors dividing the numerator exactly
    bool equals(const RationalFunction& o) const;

    bool operator==(const RationalFunction&) const = default;

private:
    QPoly num_;
    std::vector<LinearFactor> den_;
};

// The Cartier local factor with q kept symbolic: numerator in Z[q,q^-1][T]
// (UPoly coefficients read as polynomials in q) over (1 - T)^den_power.
class CartierZeta {
public:
    CartierZeta(TPoly num, int den_power);

    const TPoly& num() const { return num_; }
    int den_power() const { return den_power_; }

    void normalize();
    RationalFunction at(const Rational& q) const;

    bool operator==(const CartierZeta&) const = default;

private:
    TPoly num_; // d = 1
    int den_power_;
};

} // namespace curvezeta

#pragma once

#include "curvezeta/localring.hpp"
#include "curvezeta/motivic.hpp"
#include "curvezeta/valuesemigroup.hpp"
#include "curvezeta/zeta.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace curvezeta {

// One parsed input file. Exactly the fields of the declared mode are
// accepted; everything else is a reported error with its field path.
struct InputDescription {
    enum class Mode { parametrization, linear_conditions, numerical_semigroup, semigroup_box };
    Mode mode = Mode::numerical_semigroup;
    int branches = 1;
    std::optional<MultiIndex> truncation;
    std::vector<SeriesElement> generators;   // parametrization
    std::vector<ConditionRow> conditions;    // linear_conditions
    std::vector<int> semigroup_generators;   // numerical_semigroup
    MultiIndex conductor;                    // semigroup_box
    std::vector<MultiIndex> elements;        // semigroup_box
    std::optional<bool> expect_gorenstein;
    std::optional<bool> plane_origin;
};

InputDescription parse_input(const std::string& text);
InputDescription parse_input_file(const std::string& path);

// The resolved pipeline state for one input: the semigroup, the ring model
// when the input provides one, and a ring presentation for the finite-field
// oracle when one is derivable.
struct ResolvedInput {
    InputDescription description;
    SemigroupData semigroup;
    std::optional<LocalRingModel> model;
    std::vector<ConditionRow> ff_conditions;
    bool ff_available = false;
};

ResolvedInput resolve(const InputDescription& input);

// ---- rendering ----------------------------------------------------------

// d = 1 prints "T", otherwise "T1".."Td". Terms are ordered by
// (||exponent||, lexicographic exponent); a multi-term U-coefficient is
// parenthesized with U-exponents descending.
std::string render_tpoly(const TPoly& p);
std::string render_upoly(const UPoly& c);
std::string render_zetaform(const ZetaForm& z);
std::string render_qpoly(const QPoly& p);
std::string render_rational_function(const RationalFunction& f);
std::string render_cartier(const CartierZeta& z);

nlohmann::json zetaform_to_json(const ZetaForm& z);
nlohmann::json rational_function_to_json(const RationalFunction& f);
nlohmann::json cartier_to_json(const CartierZeta& z);
nlohmann::json semigroup_to_json(const SemigroupData& s);
nlohmann::json check_to_json(const CheckResult& c);
nlohmann::json report_to_json(const ZetaReport& r);

// Round-trip counterparts for the machine-readable zeta document.
ZetaForm zetaform_from_json(const nlohmann::json& j);

// Byte-stable dump (sorted keys, fixed indentation, trailing newline).
std::string dump_json(const nlohmann::json& j);

} // namespace curvezeta

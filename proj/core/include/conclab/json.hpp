#pragma once

// JSON encodings of every library value. Decoders report schema problems as
// Error(Schema) with a JSON path ("$.J.matrix[1][0]") in the message.

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "conclab/abgroup.hpp"
#include "conclab/dinv.hpp"
#include "conclab/obstruct.hpp"
#include "conclab/polyalg.hpp"
#include "conclab/seifert.hpp"

namespace conclab {

using Json = nlohmann::json;

/// Rationals are always strings in canonical "p/q" (or "p") form.
Json rational_to_json(const Rational& r);
/// Accepts a string or an integral number.
Rational rational_from_json(const Json& j, const std::string& path = "$");

/// Integers are numbers when they fit in 64 bits, strings otherwise.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j, const std::string& path = "$");

Json to_json(const LaurentPoly& f);
/// {"coeffs": [[exp, coeff], ...]} or a polynomial expression string.
LaurentPoly laurent_from_json(const Json& j, const std::string& path = "$");
/// As laurent_from_json, then normalized; Error(NotNormalized) if that fails.
AlexanderPolynomial alexander_from_json(const Json& j, const std::string& path = "$");

Json to_json(const PolySet& d);
PolySet polyset_from_json(const Json& j, const std::string& path = "$");
Json to_json(const PrimeSetComplement& p);

Json to_json(const SeifertMatrix& a);
/// {"matrix": [[...]], "label": str} or a knot-expression string.
SeifertMatrix seifert_from_json(const Json& j, const std::string& path = "$");

Json to_json(const Position& p);
Position position_from_json(const Json& j, const std::string& path = "$");
Json to_json(const JumpFunction& f);
JumpFunction jump_function_from_json(const Json& j, const std::string& path = "$");
Json to_json(const PeriodResult& p);

Json to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const Json& j, const std::string& path = "$");
Json element_to_json(const Element& e);
Element element_from_json(const Json& j, const FiniteAbelianGroup& g, const std::string& path = "$");
/// Table keys: coordinates joined by commas, "3" or "1,2".
std::string element_key(const Element& e);
Element element_from_key(const std::string& key, const FiniteAbelianGroup& g, const std::string& path = "$");
Json to_json(const Subgroup& s);

Json to_json(const VSequence& v);
VSequence vsequence_from_json(const Json& j, const std::string& path = "$");
Json to_json(const DTable& t);
DTable dtable_from_json(const Json& j, const std::string& path = "$");
Json to_json(const VanishingResult& r);

Json to_json(const PeriodCheck& c);
Json to_json(const TopologicalReport& r);
Json to_json(const SurgeryModel& m);
Json to_json(const SmoothReport& r);

/// Pipeline input {"m", "J", "J0_alexander", "D", "dbar"}.
struct PipelineInput {
  LinkFamilySpec spec;
  PolySet D = PolySet::unit();
  std::optional<DTable> dbar;
};
PipelineInput pipeline_input_from_json(const Json& j, const std::string& path = "$");

/// Sorted keys, no insignificant whitespace: byte-identical for equal values.
std::string canonical_dump(const Json& j);

}  // namespace conclab

#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "braidsurg/closure.hpp"
#include "braidsurg/garside.hpp"
#include "braidsurg/pipeline.hpp"
#include "braidsurg/surgery.hpp"

namespace braidsurg {

using Json = nlohmann::json;

// All parsers throw Error(errc::bad_input) on malformed documents; large
// integers may be given as JSON numbers or decimal strings.

Json to_json(const RationalCoeff& c);
RationalCoeff coeff_from_json(const Json& j);

Json to_json(const SurgeryPresentation& pres);
SurgeryPresentation presentation_from_json(const Json& j);

Json to_json(const BraidSurgeryDiagram& d);
BraidSurgeryDiagram diagram_from_json(const Json& j);

Json to_json(const ClosureInfo& info);
Json to_json(const NormalForm& nf);
Json to_json(const HomologyInvariants& h);
Json to_json(const TransformReport& rep);

// Braid word text format: whitespace-separated signed decimal integers,
// e.g. "1 -2 1"; the strand count travels separately.
BraidWord parse_word_text(int strands, const std::string& text);
std::string word_to_text(const BraidWord& w);

// Coefficient text format: "p/q", a bare integer "p" (meaning p/1), or
// "inf" for 1/0.
RationalCoeff parse_coeff_text(const std::string& text);
std::string coeff_to_text(const RationalCoeff& c);

const char* mode_name(TwistMode mode);
TwistMode mode_from_name(const std::string& name);

}  // namespace braidsurg

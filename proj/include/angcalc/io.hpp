#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "angcalc/angle.hpp"
#include "angcalc/artheory.hpp"
#include "angcalc/core.hpp"
#include "angcalc/verify.hpp"
#include "angcalc/wide.hpp"

namespace angcalc::io {

// Field order in emitted documents is fixed, so serialization is canonical.
using Json = nlohmann::ordered_json;

/// "f<i>", "s<k>:f<i>" (S^{kd} f_i) or "p<pos>". Throws ParseError.
IndecObject parse_object(const FamilyParams& p, std::string_view text);
/// "f<i>" at shift 0, "s<k>:f<i>" otherwise.
std::string format_object(const FamilyParams& p, IndecObject x);
/// "s<k>_f<i>", always with the shift; usable as a DOT identifier.
std::string node_label(const FamilyParams& p, IndecObject x);

/// Comma-separated indices; the empty string gives the empty spec.
SubcatSpec parse_subcat(const FamilyParams& p, std::string_view text);

Json to_json(const FamilyParams& p);
Json to_json(const FamilyParams& p, IndecObject x);
Json to_json(const FamilyParams& p, const SumObject& x);
Json entries_json(const Matrix& m);
Json to_json(const Morphism& f);
/// {"params", "objects": [[{shift, index}...] per slot], "maps": [{"entries"}]}.
Json to_json(const Angle& a);
Json to_json(const FLevelChain& c);
Json to_json(const ExactnessReport& r);
Json to_json(const SubcatSpec& s);
Json to_json(const TheoremBReport& r);
Json to_json(const SuiteReport& r);

FamilyParams params_from_json(const Json& j);
Angle angle_from_json(const Json& j);

std::string render_text(const FamilyParams& p, const SumObject& x);
/// X^0 -> X^1 -> ... -> X^{d+1} -> S^d X^0, zero objects written "0".
std::string render_text(const Angle& a);

/// Quiver on the positions [from, to]: one node per indecomposable, one edge
/// per irreducible arrow, members of `sub` flagged with member=true and filled.
std::string quiver_dot(const FamilyParams& p, Position from, Position to, const std::optional<SubcatSpec>& sub);

}  // namespace angcalc::io

#pragma once
#include <string>

#include "json.hpp"
#include "toricsod/generators.hpp"

namespace toricsod {

using nlohmann::json;

/* Input: a fan as {"rays": [[x,y], ...]} or the weighted-projective shorthand
 * {"weights": [w1,w2,w3]}.  Malformed documents raise kind InvalidInput;
 * the fan/weight validators contribute their own kinds. */
Fan parse_fan_input(const std::string& text);

/* Canonical serialisation used by every command: two-space indentation,
 * sorted keys, trailing newline, so parse + dump round-trips bytewise. */
std::string dump_report(const json& j);

json group_json(const FgAbelianGroup& g);        // {"free_rank":k,"torsion":[...]}
json element_json(const GroupElement& e);        // {"coords":[...],"order":d}
std::string group_string(const FgAbelianGroup& g);   // "0", "Z", "Z^2 + Z/2"
std::string element_string(const GroupElement& e);   // "0", "(1, -2; 1 mod 3)"

/* Singularity inventory of the fan: point types, Cl(X) with Pic rank, Br(X). */
json analyze_json(const Fan& f);
std::string analyze_text(const Fan& f);

/* Minimal resolution: labelled rays with d-values and per-point chains. */
json resolve_json(const ResolvedSurface& s);
std::string resolve_text(const ResolvedSurface& s);

/* Semiorthogonal-decomposition report (schema fixed by the library):
 * {"blocks":[{"point","r","a","ds","twist","algebra"}],"beta":...,
 *  "untwisted":bool,"perf_valid":bool}. */
json sod_json(const SODReport& r);
std::string sod_text(const SODReport& r);

json brauer_json(const Fan& f);   // {"order": |Br(X)|}
std::string brauer_text(const Fan& f);

/* Grothendieck groups: G0(X) of the base and the twisted group of the
 * resolution for the standard or the zero twist, with the Ext^1 torsion
 * cross-check. */
json g0_json(const Fan& f, bool zero_twist);
std::string g0_text(const Fan& f, bool zero_twist);

json kk_json(const KKPresentation& p);   // presentation plus enumerated basis
std::string kk_text(const KKPresentation& p);

json generators_json(const GeneratorSet& g);
std::string generators_text(const GeneratorSet& g);

}  // namespace toricsod

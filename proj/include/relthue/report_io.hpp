#pragma once

#include "relthue/rel_solver.hpp"
#include "relthue/root_analysis.hpp"

#include <json.hpp>

#include <string>

namespace relthue {

/**
 * Report serialization.  Every document carries "schema": 1.  Exact values
 * (rationals, ring elements) are serialized as decimal strings so nothing is
 * rounded on the way out; rationals additionally carry a fixed six-digit
 * rendering for human readers.  Field order is fixed, so identical inputs
 * produce byte-identical documents.
 */
using Json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

Family family_from_name(const std::string& name);
Scenario scenario_from_name(const std::string& name);
SolveMode mode_from_name(const std::string& name);
CaseId case_from_name(const std::string& name);
Completeness completeness_from_name(const std::string& name);

Json rat_json(const Rat& q); // {"exact": "p/q", "decimal": "±d.dddddd"}
Rat rat_from_json(const Json& j);
Json interval_json(const RatInterval& iv); // {"lo": …, "hi": …}
RatInterval interval_from_json(const Json& j);

Json quadint_json(const QuadInt& z); // coordinate pair ["a1", "a2"]
QuadInt quadint_from_json(const Json& j, const RingSpec& ring);
Json pair_json(const SolutionPair& p);
SolutionPair pair_from_json(const Json& j, const RingSpec& ring);

Json form_json(const ParamForm& form); // {"family": …, "t": …}
Json bounds_json(const BoundSet& b);
BoundSet bounds_from_json(const Json& j);
Json case_rule_json(const CaseRule& r);
Json gap_data_json(const RootGapData& g);
Json abs_list_json(const AbsSolutionList& list);
Json resolution_json(const AbsResolution& r);
AbsResolution resolution_from_json(const Json& j);

Json solve_report_json(const SolveReport& rep);
SolveReport solve_report_from_json(const Json& j);
Json verify_report_json(const VerifyReport& rep);
VerifyReport verify_report_from_json(const Json& j);

/** Shared summary row schema: t,m,solutions,completeness,mismatches. */
std::string csv_summary_header();
std::string csv_summary_row(const SolveReport& rep);
std::string csv_verify_summary(const VerifyReport& rep);

/** Absolute-inequality lists: u,v,value,completeness. */
std::string csv_abs_list(const AbsSolutionList& list);

} // namespace relthue

#pragma once

#include <string>

#include "json.hpp"
#include "tropcount/enumerate.hpp"
#include "tropcount/lifting.hpp"

namespace tropcount {

using Json = nlohmann::ordered_json;

inline constexpr const char* kProblemSchema = "tropcount/problem/v1";
inline constexpr const char* kResultSchema = "tropcount/result/v1";
inline constexpr const char* kToolVersion = "0.1.0";

// Rationals travel as "p/q" strings (plain integers also accepted).
Rat rat_from_json(const Json& value);
Json rat_to_json(const Rat& value);

ProblemSpec problem_from_json(const Json& doc);        // validates
Json problem_to_json(const ProblemSpec& spec);         // canonical form
ProblemSpec load_problem_file(const std::string& path);
std::string canonical_problem_digest(const ProblemSpec& spec);

// Result files: enumeration output plus optional lift sections, with the
// problem digest and tool version pinned for reproducibility.
Json result_to_json(const ProblemSpec& spec, const EnumerationResult& result);
Json curve_to_json(const TropicalCurve& curve);
Json lifts_to_json(const AlgebraicLift& context, const std::vector<LiftedMap>& lifted);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace tropcount

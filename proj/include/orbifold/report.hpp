#pragma once

#include <string>

#include "json.hpp"
#include "orbifold/codes.hpp"
#include "orbifold/fusion.hpp"
#include "orbifold/quadspace.hpp"
#include "orbifold/registry.hpp"
#include "orbifold/verlinde.hpp"

namespace orbifold {

// Serializers shared by the CLI and tests. Rationals are always "p/q" strings.
using Json = nlohmann::ordered_json;

Json code_info_json(const LinearCode& c);

Json modules_json(const CodePair& p);
std::string modules_csv(const CodePair& p);

Json fusion_json(const FusionVector& v);

Json table_json(const std::vector<FusionEntry>& table);
std::string table_csv(const std::vector<FusionEntry>& table);

Json verify_json(const VerifyReport& r);

Json verlinde_json(const VerlindeResult& v, bool matches_fusion);

// Runs the full quadratic-space analysis.
Json quadspace_json(const QuadSpace& qs);

}  // namespace orbifold

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "core/aq_catalog.hpp"
#include "core/global.hpp"
#include "core/langlands.hpp"

namespace coh {

using Json = nlohmann::json;

// partitions are JSON integer arrays, weights likewise
Json partition_to_json(const OrderedPartition& p);
OrderedPartition partition_from_json(const Json& j);
Json weight_to_json(const Weight& mu);
Weight weight_from_json(const Json& j);

// catalog row: kind/partition/lambda/w/eps plus the derived fields
// tempered, poincare (null when no closed formula applies) and langlands
Json module_to_json(const AqModule& m);
Json catalog_row_json(const AqModule& m);
AqModule module_from_json(const Json& j);

// parameters serialize as arrays of [p_num, p_den, q_num, q_den]
Json parameter_to_json(const WeilParameter& t);
WeilParameter parameter_from_json(const Json& j);

Json cyclo_to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclo_from_json(const Json& j);
Json subfield_to_json(const CyclotomicSubfield& f);
CyclotomicSubfield subfield_from_json(const Json& j);
Json satake_to_json(const SatakeParams& s);
SatakeParams satake_from_json(const Json& j);

Json descriptor_to_json(const GlobalRepDescriptor& d);
GlobalRepDescriptor descriptor_from_json(const Json& j);

// "0,1,1" -> {0,1,1}; used by the CLI front end
std::vector<long long> parse_int_csv(const std::string& s);

Json parse_json(const std::string& text);

}  // namespace coh

// Versioned JSON codecs for every documented file format.  Dumps use ordered
// JSON with insertion-ordered keys so reruns are byte-identical; loads reject
// unknown keys.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "indep/cover.hpp"
#include "indep/independence.hpp"
#include "indep/shattering.hpp"
#include "indep/subshift.hpp"

namespace indep {

using Json = nlohmann::ordered_json;

Json subshift_to_json(const SubshiftSpec& spec);
SubshiftSpec subshift_from_json(const Json& j);

Json toeplitz_to_json(const ToeplitzSpec& spec);
ToeplitzSpec toeplitz_from_json(const Json& j);

Json wap_to_json(const WapSpec& spec);
WapSpec wap_from_json(const Json& j);

Json trace_to_json(const TraceSet& s);
TraceSet trace_from_json(const Json& j);

Json tuple_to_json(int alphabet, const std::vector<ClopenSet>& tuple);
std::pair<int, std::vector<ClopenSet>> tuple_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace indep

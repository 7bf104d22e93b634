#pragma once

#include <json.hpp>

#include "ramsey/arrowing.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/forest_simplicity.hpp"
#include "ramsey/gamma.hpp"
#include "ramsey/gnp_analysis.hpp"

namespace ramsey {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "ramsey-report/1";

json graph_json(const Graph& g);
json coloured_json(const ColouredGraph& c);
json bound_json(const Bound& b);

json to_report(const NeighbourhoodProfile& p);
json to_report(const WellBehavedReport& r);
json to_report(const EstimateReport& r);
json to_report(const DenseSubsetReport& r);
json to_report(const GammaCheckReport& r);
json to_report(const ArrowResult& r, bool timing);
json to_report(const MinimalityReport& r);
json to_report(const NecessityReport& r);
json to_report(const RefuterResult& r);
json to_report(const ProbeResult& r);
json to_report(const SzzGraph& g);
json to_report(const MonoForest& r);
json to_report(const BoundsReport& r);
json to_report(const KoganReport& r);
json to_report(const CurveRow& r);

/// {"schema", "command", "config", "result"}.
json envelope(const std::string& command, json config, json result);

} // namespace ramsey

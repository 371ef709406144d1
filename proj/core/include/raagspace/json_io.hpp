#ifndef RAAGSPACE_JSON_IO_HPP
#define RAAGSPACE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "raagspace/blowup.hpp"
#include "raagspace/classify.hpp"
#include "raagspace/graph.hpp"
#include "raagspace/metric.hpp"
#include "raagspace/partition.hpp"
#include "raagspace/shear.hpp"

namespace raagspace {

using nlohmann::json;

// graphs: {"vertices": ["a", ...], "edges": [["a","b"], ...]}
DefiningGraph graphFromJson(const json& j);
json graphToJson(const DefiningGraph& g);
json graphInfoToJson(const DefiningGraph& g);

// partitions: {"sideA": [["a","+"], ...], "sideB": [...], "link": [...]}
WPartition partitionFromJson(const DefiningGraph& g, const json& j);
json partitionToJson(const DefiningGraph& g, const WPartition& p);
json partitionListToJson(const DefiningGraph& g, const std::vector<WPartition>& ps);

// metrics: {"widths": {"a": 1.0, ...}, "angles": [{"a": "a", "b": "b", "radians": x}, ...]}
MetricStructure metricFromJson(const BlowupComplex& b, const json& j);
json metricToJson(const BlowupComplex& b, const MetricStructure& f);

json blowupToJson(const BlowupComplex& b);
std::string blowupToDot(const BlowupComplex& b);

json classificationToJson(const BlowupComplex& b, const std::vector<HyperplaneClass>& classes);
json crossCheckToJson(const BlowupComplex& b, const CrossCheckReport& report);
json shearSystemToJson(const BlowupComplex& b, const ShearSystem& sys);

json loadJsonFile(const std::string& path);  // parse_error on failure

} // namespace raagspace

#endif

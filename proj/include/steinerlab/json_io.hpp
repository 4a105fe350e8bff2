#pragma once

#include <string>

#include <json.hpp>

#include "steinerlab/coloring.hpp"
#include "steinerlab/embeddability.hpp"
#include "steinerlab/embedding.hpp"
#include "steinerlab/graphs.hpp"
#include "steinerlab/set_system.hpp"
#include "steinerlab/tree.hpp"

namespace steinerlab {

// File schemas. Universe elements and graph vertices are 1-based on disk and
// 0-based in memory; lp p serializes as a number, or "inf" at infinity.

nlohmann::json to_json(const Metric& m);
nlohmann::json to_json(const SetSystem& sys);
nlohmann::json to_json(const EmbeddabilityTuple& t);
nlohmann::json to_json(const DstInstance& inst);
nlohmann::json to_json(const CstInstance& inst);
nlohmann::json to_json(const SimpleGraph& g);
nlohmann::json to_json(const SteinerTree& tree);
nlohmann::json to_json(const LinearCode& code);

Metric metric_from_json(const nlohmann::json& j);
SetSystem set_system_from_json(const nlohmann::json& j);
EmbeddabilityTuple tuple_from_json(const nlohmann::json& j);
DstInstance dst_instance_from_json(const nlohmann::json& j);
CstInstance cst_instance_from_json(const nlohmann::json& j);
SimpleGraph graph_from_json(const nlohmann::json& j);
SteinerTree tree_from_json(const nlohmann::json& j);
LinearCode code_from_json(const nlohmann::json& j);

/// Sorted keys, fixed layout, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace steinerlab

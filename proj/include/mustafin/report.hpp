#pragma once

// Serializable reports. JSON is the machine contract; the table renderers
// are for people. Index sets in reports are 1-based to match the usual
// e_1, ..., e_d numbering.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mustafin/tropical.hpp"

namespace mustafin {

struct ConfigurationDocument {
  std::size_t d = 0;
  std::vector<std::vector<Coord>> points;
  std::optional<std::string> label;

  bool operator==(const ConfigurationDocument&) const = default;
};

/// ParseError on malformed JSON or missing fields; DimensionError when a
/// point has the wrong length.
ConfigurationDocument parse_configuration_document(const std::string& text);
Configuration to_configuration(const ConfigurationDocument& doc);
ConfigurationDocument to_document(const Configuration& config,
                                  std::optional<std::string> label = std::nullopt);

struct HullReport {
  ConfigurationDocument config;
  std::vector<std::vector<Coord>> hull;
  bool convex = false;

  bool operator==(const HullReport&) const = default;
};

struct VertexReport {
  std::vector<Coord> vertex;
  std::vector<std::vector<std::size_t>> argmins;  // 1-based
  std::vector<std::size_t> kernel_dims;
  std::vector<std::size_t> factor_dims;
  std::vector<std::size_t> signature;
  std::size_t p = 0;
  std::vector<std::vector<std::size_t>> multidegrees;
  bool is_component = false;
  bool is_primary = false;

  bool operator==(const VertexReport&) const = default;
};

struct PartitionEntry {
  std::vector<std::size_t> multidegree;
  std::vector<Coord> vertex;

  bool operator==(const PartitionEntry&) const = default;
};

struct CountsReport {
  std::size_t total = 0;
  std::size_t primary = 0;
  std::size_t secondary = 0;

  bool operator==(const CountsReport&) const = default;
};

struct ClassificationReport {
  ConfigurationDocument config;
  std::vector<std::vector<Coord>> hull;
  std::vector<VertexReport> vertices;
  CountsReport counts;
  bool general_position = false;
  bool monomial_type = false;
  std::vector<PartitionEntry> partition;

  bool operator==(const ClassificationReport&) const = default;
};

struct GraphEdgeReport {
  std::vector<Coord> u;
  std::vector<Coord> v;
  std::vector<int> forward;   // diagonal of u -> v
  std::vector<int> backward;  // diagonal of v -> u

  bool operator==(const GraphEdgeReport&) const = default;
};

struct GraphReport {
  std::size_t d = 0;
  std::vector<std::vector<Coord>> vertices;
  std::vector<GraphEdgeReport> edges;

  bool operator==(const GraphReport&) const = default;
};

struct MinorReport {
  std::vector<std::size_t> rows;  // 1-based
  std::vector<std::size_t> cols;  // 1-based
  Coord value = 0;
  std::uint64_t optimal_count = 0;

  bool operator==(const MinorReport&) const = default;
};

struct GeneralPositionReport {
  bool general_position = false;
  std::optional<MinorReport> witness;

  bool operator==(const GeneralPositionReport&) const = default;
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool operator==(const CheckResult&) const = default;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool passed = false;

  bool operator==(const VerifyReport&) const = default;
};

void to_json(nlohmann::json& j, const ConfigurationDocument& x);
void from_json(const nlohmann::json& j, ConfigurationDocument& x);
void to_json(nlohmann::json& j, const HullReport& x);
void from_json(const nlohmann::json& j, HullReport& x);
void to_json(nlohmann::json& j, const VertexReport& x);
void from_json(const nlohmann::json& j, VertexReport& x);
void to_json(nlohmann::json& j, const PartitionEntry& x);
void from_json(const nlohmann::json& j, PartitionEntry& x);
void to_json(nlohmann::json& j, const CountsReport& x);
void from_json(const nlohmann::json& j, CountsReport& x);
void to_json(nlohmann::json& j, const ClassificationReport& x);
void from_json(const nlohmann::json& j, ClassificationReport& x);
void to_json(nlohmann::json& j, const GraphEdgeReport& x);
void from_json(const nlohmann::json& j, GraphEdgeReport& x);
void to_json(nlohmann::json& j, const GraphReport& x);
void from_json(const nlohmann::json& j, GraphReport& x);
void to_json(nlohmann::json& j, const MinorReport& x);
void from_json(const nlohmann::json& j, MinorReport& x);
void to_json(nlohmann::json& j, const GeneralPositionReport& x);
void from_json(const nlohmann::json& j, GeneralPositionReport& x);
void to_json(nlohmann::json& j, const CheckResult& x);
void from_json(const nlohmann::json& j, CheckResult& x);
void to_json(nlohmann::json& j, const VerifyReport& x);
void from_json(const nlohmann::json& j, VerifyReport& x);

HullReport build_hull_report(const Configuration& config,
                             std::optional<std::string> label = std::nullopt);
ClassificationReport build_classification_report(
    const Configuration& config, std::optional<std::string> label = std::nullopt);
GraphReport build_graph_report(const Configuration& config);
GeneralPositionReport build_general_position_report(const Configuration& config);

/// Oracle cross-checks on config itself plus `random_cases` seeded random
/// configurations of the same shape.
VerifyReport run_verification(const Configuration& config, std::uint64_t seed,
                              std::size_t random_cases = 25);

std::string render_table(const HullReport& r);
std::string render_table(const ClassificationReport& r);
std::string render_table(const GraphReport& r);
std::string render_table(const GeneralPositionReport& r);
std::string render_table(const ConfigurationDocument& r);
std::string render_table(const VerifyReport& r);

}  // namespace mustafin

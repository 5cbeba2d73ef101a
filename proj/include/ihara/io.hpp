#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ihara/covers.hpp"
#include "ihara/graph.hpp"
#include "ihara/polynomial.hpp"

namespace ihara::io {

using json = nlohmann::json;

// Graph file: {"vertices": <int>, "edges": [[a,b], ...], "name": <string, optional>}
MultiGraph graph_from_json(const json& j);
json graph_to_json(const MultiGraph& g);
MultiGraph read_graph(const std::filesystem::path& path);

// Polynomials: JSON integer array in ascending powers.
json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const json& j);

/// A "base" entry is either an inline graph object or a path, resolved
/// relative to `origin`.
MultiGraph resolve_graph(const json& entry, const std::filesystem::path& origin);

/// Voltage file: {"base": <graph>, "voltages": [...], "group": [n_1,...]}.
/// Voltages are integers (rank 1) or integer arrays, one per base edge in
/// edge order, oriented first -> second. Without "group" the voltages live
/// in the free group Z^k.
struct VoltageFile {
  MultiGraph base;
  VoltageAssignment volt;
};
VoltageFile voltage_file_from_json(const json& j, const std::filesystem::path& origin);
VoltageFile read_voltage_file(const std::filesystem::path& path);

/// Tower spec file: {"base": <graph>, "kind": "cyclic"|"homology",
/// "voltages": [...], "orders": [...], "p": int, "depth": int, "size_cap": int}.
struct TowerSpec {
  MultiGraph base;
  std::string kind;
  std::vector<GroupElement> voltages;
  std::vector<long> orders;
  long p = 2;
  std::size_t depth = 1;
  std::size_t size_cap = kDefaultSizeCap;
};
TowerSpec tower_spec_from_json(const json& j, const std::filesystem::path& origin);
TowerSpec read_tower_spec(const std::filesystem::path& path);
Tower build_tower(const TowerSpec& spec);

std::string read_text(const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);

} // namespace ihara::io

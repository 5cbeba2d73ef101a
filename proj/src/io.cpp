#include "ihara/io.hpp"

#include <fstream>
#include <sstream>

#include "ihara/errors.hpp"

namespace ihara::io {

namespace {

std::vector<GroupElement> parse_voltages(const json& j) {
  if (!j.is_array()) throw InputError("\"voltages\" must be an array");
  std::vector<GroupElement> out;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      out.push_back({v.get<long>()});
    } else if (v.is_array()) {
      out.push_back(v.get<GroupElement>());
    } else {
      throw InputError("each voltage must be an integer or an integer array");
    }
  }
  return out;
}

} // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::filesystem::path& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

MultiGraph graph_from_json(const json& j) {
  try {
    const auto v = j.at("vertices").get<long>();
    if (v <= 0) throw InputError("\"vertices\" must be positive");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair [a,b]");
      const auto a = e[0].get<long>();
      const auto b = e[1].get<long>();
      if (a < 0 || b < 0) throw InputError("edge endpoints must be non-negative");
      edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
    return MultiGraph(static_cast<std::size_t>(v), std::move(edges), j.value("name", std::string{}));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

json graph_to_json(const MultiGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  json j{{"vertices", g.vertex_count()}, {"edges", edges}};
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

MultiGraph read_graph(const std::filesystem::path& path) { return graph_from_json(read_json(path)); }

json poly_to_json(const IntPolynomial& p) { return json(p.coefficients()); }

IntPolynomial poly_from_json(const json& j) {
  try {
    return IntPolynomial(j.get<std::vector<std::int64_t>>());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

MultiGraph resolve_graph(const json& entry, const std::filesystem::path& origin) {
  if (entry.is_string()) {
    std::filesystem::path p = entry.get<std::string>();
    if (p.is_relative()) p = origin / p;
    return read_graph(p);
  }
  return graph_from_json(entry);
}

VoltageFile voltage_file_from_json(const json& j, const std::filesystem::path& origin) {
  try {
    VoltageFile out{resolve_graph(j.at("base"), origin), {}};
    out.volt.voltages = parse_voltages(j.at("voltages"));
    const std::size_t rank = out.volt.voltages.empty() ? 1 : out.volt.voltages.front().size();
    out.volt.group.orders = j.contains("group") ? j["group"].get<std::vector<long>>()
                                                : std::vector<long>(rank, 0);
    out.volt.validate(out.base);
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed voltage file: ") + e.what());
  }
}

VoltageFile read_voltage_file(const std::filesystem::path& path) {
  return voltage_file_from_json(read_json(path), path.parent_path());
}

TowerSpec tower_spec_from_json(const json& j, const std::filesystem::path& origin) {
  try {
    TowerSpec spec{resolve_graph(j.at("base"), origin), j.at("kind").get<std::string>(), {}, {}};
    if (spec.kind == "cyclic") {
      spec.voltages = parse_voltages(j.at("voltages"));
      spec.orders = j.at("orders").get<std::vector<long>>();
    } else if (spec.kind == "homology") {
      spec.p = j.at("p").get<long>();
      spec.depth = j.at("depth").get<std::size_t>();
    } else {
      throw InputError("tower kind must be \"cyclic\" or \"homology\", got \"" + spec.kind + "\"");
    }
    spec.size_cap = j.value("size_cap", kDefaultSizeCap);
    return spec;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed tower spec: ") + e.what());
  }
}

TowerSpec read_tower_spec(const std::filesystem::path& path) {
  return tower_spec_from_json(read_json(path), path.parent_path());
}

Tower build_tower(const TowerSpec& spec) {
  if (spec.kind == "homology") return homology_tower(spec.base, spec.p, spec.depth, spec.size_cap);
  const std::size_t rank = spec.voltages.empty() ? 1 : spec.voltages.front().size();
  for (long n : spec.orders) {
    double size = static_cast<double>(spec.base.vertex_count());
    for (std::size_t d = 0; d < rank; ++d) size *= static_cast<double>(n);
    if (size > static_cast<double>(spec.size_cap)) {
      std::ostringstream msg;
      msg << "cyclic tower level n = " << n << " would have " << size << " vertices, above the size cap "
          << spec.size_cap;
      throw ResourceError(msg.str());
    }
  }
  return cyclic_tower(spec.base, spec.voltages, spec.orders);
}

} // namespace ihara::io

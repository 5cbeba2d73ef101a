#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace ihara::cli {

std::string sha256_hex(const std::string& bytes);

/// Run record written next to every output: command line, hashed inputs,
/// and the numeric parameters (tolerances, grids) that shaped the results.
class Manifest {
public:
  Manifest(std::string command, std::vector<std::string> arguments);

  void add_input(const std::filesystem::path& path);
  void set(const std::string& key, nlohmann::json value);

  /// sha256 over the command, parameters, and input file hashes. Output
  /// paths and --jobs do not enter it.
  std::string inputs_hash() const;
  nlohmann::json to_json() const;

  /// `target` is either an output directory (manifest.json inside) or an
  /// output file (<file>.manifest.json beside it).
  void write_for(const std::filesystem::path& target, bool is_directory) const;

private:
  std::string command_;
  std::vector<std::string> arguments_;
  nlohmann::json inputs_ = nlohmann::json::array();
  nlohmann::json parameters_ = nlohmann::json::object();
};

} // namespace ihara::cli

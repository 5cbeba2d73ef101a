#include "manifest.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "ihara/errors.hpp"
#include "ihara/io.hpp"

namespace ihara::cli {

namespace {
constexpr const char* kVersion = "1.0.0";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

Manifest::Manifest(std::string command, std::vector<std::string> arguments)
    : command_(std::move(command)), arguments_(std::move(arguments)) {}

void Manifest::add_input(const std::filesystem::path& path) {
  inputs_.push_back({{"path", path.string()}, {"sha256", sha256_hex(io::read_text(path))}});
}

void Manifest::set(const std::string& key, nlohmann::json value) { parameters_[key] = std::move(value); }

std::string Manifest::inputs_hash() const {
  nlohmann::json contents = nlohmann::json::array();
  for (const auto& in : inputs_) contents.push_back(in["sha256"]);
  nlohmann::json basis{{"command", command_}, {"inputs", contents}, {"parameters", parameters_}};
  return sha256_hex(basis.dump());
}

nlohmann::json Manifest::to_json() const {
  return {{"tool", "ihara"},          {"version", kVersion},       {"command", command_},
          {"arguments", arguments_},  {"inputs", inputs_},         {"parameters", parameters_},
          {"inputs_hash", inputs_hash()}};
}

void Manifest::write_for(const std::filesystem::path& target, bool is_directory) const {
  const auto path = is_directory ? target / "manifest.json" : std::filesystem::path(target.string() + ".manifest.json");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << to_json().dump(2) << "\n";
}

} // namespace ihara::cli

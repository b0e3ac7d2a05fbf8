#include "qdotinfo/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qdotinfo {

SystemParams params_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("params: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("params: top level must be a JSON object");
  }
  SystemParams params;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number()) {
      throw std::invalid_argument("params: key '" + key + "' must be a number");
    }
    param_field(params, key) = value.get<double>();  // rejects unknown keys
  }
  for (const auto& name : param_names()) {
    if (!doc.contains(name)) {
      throw std::invalid_argument("params: missing key '" + name + "'");
    }
  }
  return params;
}

std::string params_to_json(const SystemParams& params) {
  nlohmann::ordered_json doc;
  for (const auto& name : param_names()) {
    doc[name] = param_field(params, name);
  }
  return doc.dump(2) + "\n";
}

SystemParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open parameter file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return params_from_json(buffer.str());
}

}  // namespace qdotinfo

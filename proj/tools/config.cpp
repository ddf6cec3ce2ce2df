#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uag/error.hpp"

namespace uag::cli {

namespace {

using nlohmann::json;

std::size_t read_count(const json& v, const std::string& key, const std::string& origin) {
  if (!v.is_number_unsigned()) throw InputError(origin + ": '" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

void apply_caps(const json& j, const std::string& origin, Caps& c) {
  if (!j.is_object()) throw InputError(origin + ": 'caps' must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "assignments") c.assignments = read_count(v, key, origin);
    else if (key == "lattice_points") c.lattice_points = read_count(v, key, origin);
    else if (key == "hom_candidates") c.hom_candidates = read_count(v, key, origin);
    else if (key == "subpower_elements") c.subpower_elements = read_count(v, key, origin);
    else if (key == "structure_carrier") c.structure_carrier = read_count(v, key, origin);
    else throw InputError(origin + ": unknown cap '" + key + "'");
  }
}

void apply_bound(const json& j, const std::string& origin, UniverseBound& b) {
  if (!j.is_object()) throw InputError(origin + ": 'bound' must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "max_depth") b.max_depth = read_count(v, key, origin);
    else if (key == "max_vars") b.max_vars = read_count(v, key, origin);
    else if (key == "max_system_size") b.max_system_size = read_count(v, key, origin);
    else if (key == "max_terms") b.max_terms = read_count(v, key, origin);
    else if (key == "max_pairs") b.max_pairs = read_count(v, key, origin);
    else throw InputError(origin + ": unknown bound '" + key + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  if (name == "dot") return Format::Dot;
  throw InputError("unknown format '" + name + "' (expected json, text or dot)");
}

void apply_config_text(const std::string& text, const std::string& origin, Settings& s) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what(), 1, e.byte);
  }
  if (!j.is_object()) throw InputError(origin + ": config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "caps") apply_caps(v, origin, s.caps);
    else if (key == "bound") apply_bound(v, origin, s.bound);
    else if (key == "seed") s.seed = read_count(v, key, origin);
    else if (key == "format") {
      if (!v.is_string()) throw InputError(origin + ": 'format' must be a string");
      s.format = parse_format(v.get<std::string>());
    } else {
      throw InputError(origin + ": unknown key '" + key + "'");
    }
  }
}

Settings resolve_settings(const Overrides& o) {
  Settings s;
  std::string path = o.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("UAG_CONFIG"); env != nullptr && *env != '\0') path = env;
  }
  if (!path.empty()) apply_config_text(read_file(path), path, s);
  if (o.format) s.format = parse_format(*o.format);
  if (o.seed) s.seed = *o.seed;
  return s;
}

}  // namespace uag::cli

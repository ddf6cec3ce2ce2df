#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "uag/config.hpp"

namespace uag::cli {

enum class Format { Json, Text, Dot };

struct Settings {
  Caps caps;
  UniverseBound bound;
  std::uint64_t seed = 0;
  Format format = Format::Json;
};

/// Values given on the command line; they override any config file.
struct Overrides {
  std::string config_path;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
};

Format parse_format(const std::string& name);

/// Reads a JSON config document into `s`. Unknown keys are input errors.
void apply_config_text(const std::string& text, const std::string& origin, Settings& s);

/// Defaults, then the file named by UAG_CONFIG when no --config is given,
/// then the --config file, then the explicit flags.
Settings resolve_settings(const Overrides& o);

}  // namespace uag::cli

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "lieconv/charmult.hpp"
#include "lieconv/convexity.hpp"

namespace lieconv::cli {

enum class OutputFormat { Text, Structured };

/// Environment variable that sets the persistent cache path.
inline constexpr const char* kCacheEnv = "LIECONV_CACHE";

struct Config {
  std::int64_t dimension_ceiling = kDefaultDimensionCeiling;
  std::int64_t instance_budget = kDefaultInstanceBudget;
  std::optional<std::string> cache_path;
  std::optional<std::uint64_t> seed;
  OutputFormat output = OutputFormat::Text;
  unsigned workers = 1;

  /// Throws InvalidArgument for non-positive ceilings.
  void validate() const;
};

/// Applies the environment (lowest precedence) to cfg.
void apply_environment(Config& cfg, const std::function<const char*(const char*)>& getenv_fn);

/// Applies a `key = value` file to cfg. Blank lines and `#` comments are
/// ignored. Keys: dimension_ceiling, instance_budget, cache_path, seed,
/// output (text|structured), workers. Throws InvalidArgument on unknown keys
/// or bad values, naming the line.
void apply_config_text(Config& cfg, const std::string& text, const std::string& origin = "config");
void apply_config_file(Config& cfg, const std::string& path);

OutputFormat parse_output_format(const std::string& s);

}  // namespace lieconv::cli

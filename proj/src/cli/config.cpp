#include "lieconv/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <boost/algorithm/string/trim.hpp>

#include "lieconv/error.hpp"

namespace lieconv::cli {

void Config::validate() const {
  if (dimension_ceiling <= 0) throw InvalidArgument("dimension_ceiling must be positive");
  if (instance_budget <= 0) throw InvalidArgument("instance_budget must be positive");
  if (workers == 0) throw InvalidArgument("workers must be positive");
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "structured") return OutputFormat::Structured;
  throw InvalidArgument("output must be 'text' or 'structured', got '" + s + "'");
}

void apply_environment(Config& cfg, const std::function<const char*(const char*)>& getenv_fn) {
  if (const char* path = getenv_fn(kCacheEnv); path && *path) cfg.cache_path = path;
}

namespace {

template <typename T>
T parse_number(const std::string& value, const std::string& where) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw InvalidArgument(where + ": expected an integer, got '" + value + "'");
  return out;
}

}  // namespace

void apply_config_text(Config& cfg, const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    boost::algorithm::trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidArgument(where + ": expected 'key = value'");
    std::string key = boost::algorithm::trim_copy(line.substr(0, eq));
    std::string value = boost::algorithm::trim_copy(line.substr(eq + 1));
    if (key == "dimension_ceiling") {
      cfg.dimension_ceiling = parse_number<std::int64_t>(value, where);
    } else if (key == "instance_budget") {
      cfg.instance_budget = parse_number<std::int64_t>(value, where);
    } else if (key == "cache_path") {
      cfg.cache_path = value;
    } else if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(value, where);
    } else if (key == "output") {
      cfg.output = parse_output_format(value);
    } else if (key == "workers") {
      cfg.workers = parse_number<unsigned>(value, where);
    } else {
      throw InvalidArgument(where + ": unknown key '" + key + "'");
    }
  }
}

void apply_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str(), path);
}

}  // namespace lieconv::cli

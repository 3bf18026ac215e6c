#include "lieconv/cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <boost/crc.hpp>

#include "lieconv/cli/notation.hpp"
#include "lieconv/error.hpp"

namespace lieconv::cli {

namespace {

constexpr const char* kMagic = "lieconv-weight-cache 1";

std::string crc_hex(std::string_view body) {
  boost::crc_32_type crc;
  crc.process_bytes(body.data(), body.size());
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", crc.checksum());
  return buf;
}

// flock on a sidecar file; released on destruction.
class LockFile {
 public:
  explicit LockFile(const std::string& path) : fd_(::open((path + ".lock").c_str(), O_RDWR | O_CREAT, 0644)) {
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~LockFile() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  LockFile(const LockFile&) = delete;
  LockFile& operator=(const LockFile&) = delete;
  bool ok() const { return fd_ >= 0; }

 private:
  int fd_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string serialize_cache(const WeightSystemCache& cache) {
  std::ostringstream body;
  body << kMagic << '\n';
  for (const auto& [key, ws] : cache.entries()) {
    body << "entry " << family_letter(key.family) << key.rank << ' ' << key.highest.str() << ' ' << ws->mult.size()
         << '\n';
    for (const auto& [w, m] : ws->sorted()) body << w.str() << ' ' << m << '\n';
  }
  std::string text = body.str();
  return text + "checksum " + crc_hex(text) + "\n";
}

bool deserialize_cache(const std::string& text, WeightSystemCache& cache, std::string& reason) {
  const auto cut = text.rfind("checksum ");
  if (cut == std::string::npos || (cut > 0 && text[cut - 1] != '\n')) {
    reason = "missing checksum";
    return false;
  }
  const std::string body = text.substr(0, cut);
  std::string stored = text.substr(cut + 9);
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
  if (stored != crc_hex(body)) {
    reason = "checksum mismatch";
    return false;
  }

  std::istringstream in(body);
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    reason = "unrecognized header";
    return false;
  }
  std::vector<std::pair<RootSystem, WeightSystem>> loaded;
  try {
    while (std::getline(in, line)) {
      std::istringstream head(line);
      std::string tag, rs_name, hw_text;
      std::size_t count = 0;
      if (!(head >> tag >> rs_name >> hw_text >> count) || tag != "entry") {
        reason = "malformed entry header";
        return false;
      }
      RootSystem rs = parse_root_system(rs_name);
      WeightSystem ws;
      ws.highest = parse_weight(rs, hw_text);
      for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) {
          reason = "truncated entry";
          return false;
        }
        const auto sp = line.rfind(' ');
        if (sp == std::string::npos) {
          reason = "malformed weight line";
          return false;
        }
        ws.mult.emplace(parse_weight(rs, line.substr(0, sp)), std::stoll(line.substr(sp + 1)));
      }
      if (ws.multiplicity(ws.highest) != 1 || ws.total() != weyl_dim(rs, ws.highest)) {
        reason = "inconsistent weight system for " + ws.highest.str();
        return false;
      }
      loaded.emplace_back(std::move(rs), std::move(ws));
    }
  } catch (const std::exception& e) {
    reason = e.what();
    return false;
  }
  for (auto& [rs, ws] : loaded) cache.insert(rs, std::make_shared<const WeightSystem>(std::move(ws)));
  return true;
}

std::size_t load_cache_file(const std::string& path, WeightSystemCache& cache, std::ostream& warn) {
  if (!std::filesystem::exists(path)) return 0;
  const auto before = cache.size();
  std::string reason;
  if (!deserialize_cache(read_file(path), cache, reason)) {
    warn << "warning: ignoring cache file " << path << " (" << reason << "); recomputing\n";
    return 0;
  }
  return cache.size() - before;
}

void save_cache_file(const std::string& path, const WeightSystemCache& cache, std::ostream& warn) {
  LockFile lock(path);
  if (!lock.ok()) {
    warn << "warning: cannot lock cache file " << path << "; not saving\n";
    return;
  }
  // Merge with whatever another writer may have stored meanwhile.
  WeightSystemCache merged;
  if (std::filesystem::exists(path)) {
    std::string reason;
    deserialize_cache(read_file(path), merged, reason);
  }
  for (const auto& [key, ws] : cache.entries()) merged.insert(RootSystem(key.family, key.rank), ws);

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize_cache(merged);
    if (!out) {
      warn << "warning: cannot write cache file " << tmp << "\n";
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) warn << "warning: cannot replace cache file " << path << ": " << ec.message() << "\n";
}

}  // namespace lieconv::cli

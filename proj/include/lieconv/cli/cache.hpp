#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include "lieconv/charmult.hpp"

namespace lieconv::cli {

/// Text serialization of a WeightSystemCache:
///
///     lieconv-weight-cache 1
///     entry A2 [1,1] 7
///     [-1,-1] 1
///     ...
///     checksum 1a2b3c4d
///
/// The checksum is the CRC-32 of every byte before the checksum line.
std::string serialize_cache(const WeightSystemCache& cache);

/// Parses serialized text into `cache`. Returns false, with a reason, when the
/// text is damaged in any way; `cache` is left untouched in that case.
bool deserialize_cache(const std::string& text, WeightSystemCache& cache, std::string& reason);

/// Loads `path` into the cache if it exists. Corrupt files produce a warning
/// on `warn` and are ignored. Returns the number of entries loaded.
std::size_t load_cache_file(const std::string& path, WeightSystemCache& cache, std::ostream& warn);

/// Merges the cache into `path` under an advisory lock, replacing the file
/// atomically. Existing valid entries are kept.
void save_cache_file(const std::string& path, const WeightSystemCache& cache, std::ostream& warn);

}  // namespace lieconv::cli

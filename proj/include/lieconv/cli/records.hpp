#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lieconv/charmult.hpp"
#include "lieconv/convexity.hpp"

// Structured output: one JSON object per line, each with `schema_version`
// and `kind`. Every record type has a parser back into the data model.
namespace lieconv::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct DecompositionRecord {
  std::string root_system;
  std::vector<Weight> factors;
  Decomposition decomposition;
  friend bool operator==(const DecompositionRecord&, const DecompositionRecord&) = default;
};

struct SaturationRecord {
  std::string root_system;
  std::vector<Weight> factors;
  std::vector<std::pair<std::int64_t, std::int64_t>> profile;
  friend bool operator==(const SaturationRecord&, const SaturationRecord&) = default;
};

struct PrvRecord {
  std::string root_system;
  Weight lambda;
  Weight mu;
  std::vector<std::pair<Weight, std::int64_t>> components;  // weight, multiplicity in the product
  friend bool operator==(const PrvRecord&, const PrvRecord&) = default;
};

struct BranchRecord {
  Partition partition;
  std::size_t n = 0;
  std::vector<Partition> restrictions;
  friend bool operator==(const BranchRecord&, const BranchRecord&) = default;
};

struct IntegerRecord {
  std::string kind;  // "lr_coefficient" or "kostka"
  std::vector<Partition> inputs;
  std::int64_t value = 0;
  friend bool operator==(const IntegerRecord&, const IntegerRecord&) = default;
};

/// Terms by descending dimension, then weight. Text and structured output
/// both use this order.
std::vector<std::pair<Weight, std::int64_t>> display_order(const RootSystem& rs, const Decomposition& d);

Json to_record(const RootSystem& rs, const DecompositionRecord& r);
Json to_record(const Violation& v);
Json scan_summary_record(const ScanReport& report, bool with_timing);
Json to_record(const SaturationRecord& r);
Json to_record(const PrvRecord& r);
Json to_record(const BranchRecord& r);
Json to_record(const IntegerRecord& r);

/// Throws InvalidArgument on schema mismatch or missing fields.
DecompositionRecord parse_decomposition_record(const Json& j);
/// Violation records followed by one scan_summary record.
ScanReport parse_scan_report(const std::vector<Json>& records);
SaturationRecord parse_saturation_record(const Json& j);
PrvRecord parse_prv_record(const Json& j);
BranchRecord parse_branch_record(const Json& j);
IntegerRecord parse_integer_record(const Json& j);

/// Splits line-delimited output into records.
std::vector<Json> parse_record_lines(const std::string& text);

}  // namespace lieconv::cli

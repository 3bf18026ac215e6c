#include "lieconv/cli/records.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "lieconv/cli/notation.hpp"
#include "lieconv/error.hpp"

namespace lieconv::cli {

namespace {

Json coords(const Weight& w) { return Json(std::vector<std::int64_t>(w.coords().begin(), w.coords().end())); }

Weight weight_from(const Json& j) {
  auto v = j.get<std::vector<std::int64_t>>();
  return Weight(std::span<const std::int64_t>(v));
}

Json weights(std::span<const Weight> ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(coords(w));
  return a;
}

std::vector<Weight> weights_from(const Json& j) {
  std::vector<Weight> out;
  for (const auto& w : j) out.push_back(weight_from(w));
  return out;
}

Json partition(const Partition& p) { return Json(p.parts()); }
Partition partition_from(const Json& j) { return Partition(j.get<std::vector<std::int64_t>>()); }

Json header(const char* kind) { return Json{{"schema_version", kSchemaVersion}, {"kind", kind}}; }

void expect(const Json& j, const char* kind) {
  if (!j.is_object() || !j.contains("schema_version") || !j.contains("kind"))
    throw InvalidArgument("record is missing schema_version or kind");
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw InvalidArgument("unsupported schema_version " + j.at("schema_version").dump());
  if (j.at("kind").get<std::string>() != kind)
    throw InvalidArgument("expected a " + std::string(kind) + " record, got " + j.at("kind").dump());
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed record: ") + e.what());
  }
}

}  // namespace

std::vector<std::pair<Weight, std::int64_t>> display_order(const RootSystem& rs, const Decomposition& d) {
  std::vector<std::tuple<BigInt, Weight, std::int64_t>> rows;
  for (const auto& [w, m] : d.terms()) rows.emplace_back(weyl_dim(rs, w), w, m);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  std::vector<std::pair<Weight, std::int64_t>> out;
  for (auto& [dim, w, m] : rows) out.emplace_back(std::move(w), m);
  return out;
}

Json to_record(const RootSystem& rs, const DecompositionRecord& r) {
  Json j = header("decomposition");
  j["root_system"] = r.root_system;
  j["factors"] = weights(r.factors);
  Json terms = Json::array();
  for (const auto& [w, m] : display_order(rs, r.decomposition))
    terms.push_back({{"weight", coords(w)}, {"multiplicity", m}, {"dimension", weyl_dim(rs, w).str()}});
  j["terms"] = std::move(terms);
  return j;
}

DecompositionRecord parse_decomposition_record(const Json& j) {
  return guarded([&] {
    expect(j, "decomposition");
    DecompositionRecord r;
    r.root_system = j.at("root_system").get<std::string>();
    const RootSystem rs = parse_root_system(r.root_system);
    r.factors = weights_from(j.at("factors"));
    for (const auto& t : j.at("terms")) {
      Weight w = weight_from(t.at("weight"));
      rs.check(w);
      const auto m = t.at("multiplicity").get<std::int64_t>();
      if (m <= 0) throw InvalidArgument("decomposition multiplicities must be positive");
      if (weyl_dim(rs, w).str() != t.at("dimension").get<std::string>())
        throw InvalidArgument("dimension field disagrees with " + w.str());
      r.decomposition.add(w, m);
    }
    return r;
  });
}

Json to_record(const Violation& v) {
  Json j = header("violation");
  j["instance_index"] = v.instance_index;
  j["instance"] = v.instance;
  j["base"] = coords(v.line.base);
  j["direction"] = coords(v.line.direction);
  j["steps"] = v.line.steps;
  j["occupancies"] = v.line.occupancies;
  return j;
}

Json scan_summary_record(const ScanReport& report, bool with_timing) {
  Json j = header("scan_summary");
  j["instances_checked"] = report.instances_checked;
  j["lines_checked"] = report.lines_checked;
  j["violations"] = report.violations.size();
  if (with_timing) j["elapsed_ns"] = report.elapsed.count();
  return j;
}

ScanReport parse_scan_report(const std::vector<Json>& records) {
  return guarded([&] {
    if (records.empty()) throw InvalidArgument("empty scan report");
    ScanReport report;
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
      const Json& j = records[i];
      expect(j, "violation");
      Violation v;
      v.instance_index = j.at("instance_index").get<std::int64_t>();
      v.instance = j.at("instance").get<std::string>();
      v.line.base = weight_from(j.at("base"));
      v.line.direction = weight_from(j.at("direction"));
      v.line.steps = j.at("steps").get<std::int64_t>();
      v.line.occupancies = j.at("occupancies").get<std::vector<std::int64_t>>();
      report.violations.push_back(std::move(v));
    }
    const Json& s = records.back();
    expect(s, "scan_summary");
    report.instances_checked = s.at("instances_checked").get<std::int64_t>();
    report.lines_checked = s.at("lines_checked").get<std::int64_t>();
    if (s.at("violations").get<std::size_t>() != report.violations.size())
      throw InvalidArgument("scan summary violation count disagrees with violation records");
    if (s.contains("elapsed_ns")) report.elapsed = std::chrono::nanoseconds(s.at("elapsed_ns").get<std::int64_t>());
    return report;
  });
}

Json to_record(const SaturationRecord& r) {
  Json j = header("saturation_profile");
  j["root_system"] = r.root_system;
  j["factors"] = weights(r.factors);
  Json prof = Json::array();
  for (const auto& [m, d] : r.profile) prof.push_back({{"m", m}, {"invariants", d}});
  j["profile"] = std::move(prof);
  j["saturation_broken"] = breaks_saturation(r.profile);
  return j;
}

SaturationRecord parse_saturation_record(const Json& j) {
  return guarded([&] {
    expect(j, "saturation_profile");
    SaturationRecord r;
    r.root_system = j.at("root_system").get<std::string>();
    r.factors = weights_from(j.at("factors"));
    for (const auto& p : j.at("profile"))
      r.profile.emplace_back(p.at("m").get<std::int64_t>(), p.at("invariants").get<std::int64_t>());
    return r;
  });
}

Json to_record(const PrvRecord& r) {
  Json j = header("prv_components");
  j["root_system"] = r.root_system;
  j["lambda"] = coords(r.lambda);
  j["mu"] = coords(r.mu);
  Json comps = Json::array();
  for (const auto& [w, m] : r.components) comps.push_back({{"weight", coords(w)}, {"multiplicity", m}});
  j["components"] = std::move(comps);
  return j;
}

PrvRecord parse_prv_record(const Json& j) {
  return guarded([&] {
    expect(j, "prv_components");
    PrvRecord r;
    r.root_system = j.at("root_system").get<std::string>();
    r.lambda = weight_from(j.at("lambda"));
    r.mu = weight_from(j.at("mu"));
    for (const auto& c : j.at("components"))
      r.components.emplace_back(weight_from(c.at("weight")), c.at("multiplicity").get<std::int64_t>());
    return r;
  });
}

Json to_record(const BranchRecord& r) {
  Json j = header("branching");
  j["partition"] = partition(r.partition);
  j["n"] = r.n;
  Json rs = Json::array();
  for (const auto& p : r.restrictions) rs.push_back(partition(p));
  j["restrictions"] = std::move(rs);
  return j;
}

BranchRecord parse_branch_record(const Json& j) {
  return guarded([&] {
    expect(j, "branching");
    BranchRecord r;
    r.partition = partition_from(j.at("partition"));
    r.n = j.at("n").get<std::size_t>();
    for (const auto& p : j.at("restrictions")) r.restrictions.push_back(partition_from(p));
    return r;
  });
}

Json to_record(const IntegerRecord& r) {
  Json j = header(r.kind.c_str());
  Json in = Json::array();
  for (const auto& p : r.inputs) in.push_back(partition(p));
  j["inputs"] = std::move(in);
  j["value"] = r.value;
  return j;
}

IntegerRecord parse_integer_record(const Json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("kind")) throw InvalidArgument("record is missing kind");
    IntegerRecord r;
    r.kind = j.at("kind").get<std::string>();
    if (r.kind != "lr_coefficient" && r.kind != "kostka") throw InvalidArgument("not an integer record: " + r.kind);
    expect(j, r.kind.c_str());
    for (const auto& p : j.at("inputs")) r.inputs.push_back(partition_from(p));
    r.value = j.at("value").get<std::int64_t>();
    return r;
  });
}

std::vector<Json> parse_record_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const Json::exception& e) {
      throw InvalidArgument(std::string("malformed record line: ") + e.what());
    }
  }
  return out;
}

}  // namespace lieconv::cli

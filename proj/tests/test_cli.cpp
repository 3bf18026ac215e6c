#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <boost/crc.hpp>

#include "doctest.h"

#include "lieconv/cli/app.hpp"
#include "lieconv/cli/cache.hpp"
#include "lieconv/cli/config.hpp"
#include "lieconv/cli/notation.hpp"
#include "lieconv/cli/records.hpp"
#include "lieconv/error.hpp"

using namespace lieconv;
using namespace lieconv::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, std::map<std::string, std::string> env = {}) {
  std::ostringstream out, err;
  const int code = run(args, out, err, [&](const char* key) -> const char* {
    auto it = env.find(key);
    return it == env.end() ? nullptr : it->second.c_str();
  });
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "lieconv-unit";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("notation parsing") {
  CHECK(parse_root_system("A2") == RootSystem(Family::A, 2));
  CHECK(parse_root_system("B3") == RootSystem(Family::B, 3));
  CHECK_THROWS_AS(parse_root_system("C3"), ParseError);
  CHECK_THROWS_AS(parse_root_system("A"), ParseError);
  CHECK_THROWS_AS(parse_root_system("B1"), ParseError);

  const RootSystem a2(Family::A, 2);
  CHECK(parse_weight(a2, "[1,0]") == Weight{1, 0});
  CHECK(parse_weight(a2, "[ -1 , 2 ]") == Weight{-1, 2});
  CHECK(parse_weight("[3]") == Weight{3});
  CHECK(parse_partition("2,1,0") == Partition{2, 1});
  CHECK(parse_partition("0") == Partition{});
  CHECK(format_weight(a2, {1, 1}) == "A2 [1,1]");
  CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
}

TEST_CASE("parse errors point at the offending character") {
  const RootSystem a2(Family::A, 2);
  try {
    parse_weight(a2, "[1,x]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
    const std::string pretty = e.pretty();
    CHECK(pretty.find("[1,x]") != std::string::npos);
    CHECK(pretty.find("\n     ^") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_weight(a2, "[1,0,0]"), ParseError);
  CHECK_THROWS_AS(parse_weight(a2, "[1,0"), ParseError);
  CHECK_THROWS_AS(parse_weight(a2, "[1,0]x"), ParseError);
  CHECK_THROWS_AS(parse_weight(a2, "[99999999999999999999,0]"), ParseError);

  const auto r = invoke({"decompose", "A2", "[1,x]"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find('^') != std::string::npos);
}

TEST_CASE("decompose output") {
  auto r = invoke({"decompose", "A2", "[1,0]", "[0,1]"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "[1,1] x1\n[0,0] x1\n");
  r = invoke({"decompose", "B3", "[1,0,0]", "[1,0,0]"});
  CHECK(r.out == "[2,0,0] x1\n[0,1,0] x1\n[0,0,0] x1\n");
  r = invoke({"decompose", "A1", "[0]"});
  CHECK(r.out == "[0] x1\n");
  r = invoke({"decompose", "--oracle", "B3", "[1,0,0]", "[1,0,0]"});
  CHECK(r.out == "[2,0,0] x1\n[0,1,0] x1\n[0,0,0] x1\n");
  r = invoke({"decompose", "A2", "[-1,0]"});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"check-convexity", "B3", "[1,0,0]", "[1,0,0]"}).code == kExitViolation);
  CHECK(invoke({"check-convexity", "A2", "[1,1]", "[1,1]"}).code == kExitOk);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"lr", "2,1", "2,1"}).code == kExitUsage);
  CHECK(invoke({"decompose", "A2"}).code == kExitUsage);
  CHECK(invoke({"decompose", "--oracle", "--dimension-ceiling", "10", "A2", "[1,1]", "[1,1]"}).code ==
        kExitResource);
  CHECK(invoke({"--dimension-ceiling", "10", "decompose", "--oracle", "A2", "[1,1]", "[1,1]"}).code ==
        kExitResource);
  CHECK(invoke({"--dimension-ceiling", "0", "decompose", "A1", "[0]"}).code == kExitUsage);
  CHECK(invoke({"scan-convexity", "A2", "--r", "3", "--bound", "2", "--instance-budget", "10"}).code ==
        kExitResource);
  // Random mode needs a seed.
  CHECK(invoke({"scan-convexity", "A2", "--r", "2", "--bound", "1", "--random", "5"}).code == kExitUsage);
  CHECK(invoke({"--seed", "3", "scan-convexity", "A2", "--r", "2", "--bound", "1", "--random", "5"}).code ==
        kExitOk);
  CHECK(invoke({"prv", "A2", "[1,1]"}).code == kExitUsage);
}

TEST_CASE("scan and integer commands") {
  auto r = invoke({"scan-convexity", "A2", "--r", "3", "--bound", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "729 instances, 0 violations\n");
  r = invoke({"check-convexity", "B3", "[1,0,0]", "[1,0,0]"});
  CHECK(r.out.find("base=[0,0,0] dir=[1,0,0] k=2 occ=[1,0,1]") != std::string::npos);
  CHECK(invoke({"lr", "2,1", "2,1", "3,2,1"}).out == "2\n");
  CHECK(invoke({"lr", "1", "0", "1"}).out == "1\n");
  CHECK(invoke({"kostka", "2,1", "1,1,1"}).out == "2\n");
  r = invoke({"branch", "2,1,0", "--n", "3"});
  CHECK(r.out == "2,1\n2,0\n1,1\n1,0\n");
  r = invoke({"prv", "A2", "[1,1]", "[1,1]"});
  CHECK(r.code == kExitOk);
  std::size_t occurs = 0;
  for (std::size_t pos = 0; (pos = r.out.find("occurs", pos)) != std::string::npos; ++pos) ++occurs;
  CHECK(occurs == 5);
}

TEST_CASE("saturation command") {
  auto r = invoke({"saturation", "B3", "[1,0,0]", "[1,0,0]", "[1,0,0]", "--mmax", "2"});
  CHECK(r.code == kExitOk);  // a type B failure is expected, not an error
  CHECK(r.out.rfind("m=1: 0\nm=2: 1\n", 0) == 0);
  r = invoke({"saturation", "A2", "[1,0]", "[1,0]", "[1,0]", "--mmax", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("m=1: 1\n", 0) == 0);
}

TEST_CASE("structured records round-trip") {
  const RootSystem b3(Family::B, 3);
  DecompositionRecord d{"B3", {{1, 0, 0}, {1, 0, 0}}, tensor_decompose(b3, {1, 0, 0}, {1, 0, 0})};
  const Json j = to_record(b3, d);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["kind"] == "decomposition");
  CHECK(parse_decomposition_record(Json::parse(j.dump())) == d);

  const std::vector<Weight> v{Weight{1, 0, 0}, Weight{1, 0, 0}};
  const auto rep = scan_instance(b3, v);
  std::vector<Json> lines;
  for (const auto& viol : rep.violations) lines.push_back(to_record(viol));
  lines.push_back(scan_summary_record(rep, false));
  CHECK(parse_scan_report(lines).same_outcome(rep));

  SaturationRecord s{"B3", {{1, 0, 0}}, {{1, 0}, {2, 1}}};
  CHECK(parse_saturation_record(to_record(s)) == s);
  PrvRecord p{"A2", {1, 1}, {1, 1}, {{{2, 2}, 1}, {{1, 1}, 2}}};
  CHECK(parse_prv_record(to_record(p)) == p);
  BranchRecord b{Partition{2, 1}, 3, {Partition{2, 1}, Partition{1}}};
  CHECK(parse_branch_record(to_record(b)) == b);
  IntegerRecord k{"kostka", {Partition{2, 1}, Partition{1, 1, 1}}, 2};
  CHECK(parse_integer_record(to_record(k)) == k);

  Json bad = to_record(k);
  bad["schema_version"] = 2;
  CHECK_THROWS(parse_integer_record(bad));
}

TEST_CASE("structured CLI output parses back") {
  auto r = invoke({"--output", "structured", "decompose", "A2", "[1,0]", "[0,1]"});
  REQUIRE(r.code == kExitOk);
  auto recs = parse_record_lines(r.out);
  REQUIRE(recs.size() == 1);
  const auto d = parse_decomposition_record(recs[0]);
  CHECK(d.decomposition == tensor_decompose(RootSystem(Family::A, 2), {1, 0}, {0, 1}));

  r = invoke({"check-convexity", "B3", "[1,0,0]", "[1,0,0]", "--output", "structured"});
  recs = parse_record_lines(r.out);
  const auto rep = parse_scan_report(recs);
  CHECK(rep.instances_checked == 1);
  CHECK(rep.violations.size() == 1);
  CHECK(r.out.find("elapsed") == std::string::npos);
  r = invoke({"--timing", "--output", "structured", "check-convexity", "B3", "[1,0,0]", "[1,0,0]"});
  CHECK(r.out.find("elapsed_ns") != std::string::npos);
}

TEST_CASE("config precedence: flags over file over environment") {
  Config cfg;
  apply_environment(cfg, [](const char* k) -> const char* {
    return std::string(k) == kCacheEnv ? "/tmp/from-env" : nullptr;
  });
  CHECK(cfg.cache_path == "/tmp/from-env");
  apply_config_text(cfg, "# comment\ncache_path = /tmp/from-file\n\nseed = 7\noutput = structured\n");
  CHECK(cfg.cache_path == "/tmp/from-file");
  CHECK(cfg.seed == 7u);
  CHECK(cfg.output == OutputFormat::Structured);
  CHECK_THROWS_AS(apply_config_text(cfg, "colour = blue\n"), InvalidArgument);
  CHECK_THROWS_AS(apply_config_text(cfg, "seed = x\n"), InvalidArgument);
  Config bad;
  bad.instance_budget = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);

  // End to end through the CLI.
  const auto conf = scratch("prec.conf");
  std::ofstream(conf) << "output = structured\n";
  auto r = invoke({"--config", conf.string(), "lr", "1", "0", "1"});
  CHECK(r.out.find("\"schema_version\":1") != std::string::npos);
  r = invoke({"--config", conf.string(), "--output", "text", "lr", "1", "0", "1"});
  CHECK(r.out == "1\n");
  CHECK(invoke({"--config", "/nonexistent/file", "lr", "1", "0", "1"}).code == kExitUsage);
}

TEST_CASE("cache file: warm and cold runs agree, corruption falls back") {
  const auto path = scratch("ws.cache");
  const std::vector<std::string> args{"--cache", path.string(), "--output", "structured", "decompose",
                                      "B3", "[1,1,0]", "[0,1,1]"};
  default_weight_cache().clear();
  const auto cold = invoke(args);
  REQUIRE(cold.code == kExitOk);
  REQUIRE(std::filesystem::exists(path));
  default_weight_cache().clear();
  const auto warm = invoke(args);
  CHECK(warm.out == cold.out);
  CHECK(warm.err.empty());

  // The environment variable selects the cache when no flag is given.
  default_weight_cache().clear();
  const auto via_env = invoke({"decompose", "A2", "[2,0]", "[0,2]"}, {{kCacheEnv, path.string()}});
  CHECK(via_env.code == kExitOk);
  WeightSystemCache loaded;
  std::ostringstream warn;
  CHECK(load_cache_file(path.string(), loaded, warn) > 0);
  CHECK(loaded.find(RootSystem(Family::A, 2), {2, 0}) != nullptr);
  CHECK(warn.str().empty());

  // Flip one byte in the body.
  std::string text;
  {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  text[text.find("entry") + 7] = 'X';
  std::ofstream(path, std::ios::trunc) << text;
  default_weight_cache().clear();
  const auto corrupt = invoke(args);
  CHECK(corrupt.code == kExitOk);
  CHECK(corrupt.out == cold.out);
  CHECK(corrupt.err.find("warning") != std::string::npos);
}

TEST_CASE("cache serialization round-trip and validation") {
  WeightSystemCache c;
  const RootSystem b2(Family::B, 2);
  c.insert(b2, std::make_shared<const WeightSystem>(compute_weight_system(b2, {1, 1})));
  const std::string text = serialize_cache(c);
  WeightSystemCache back;
  std::string reason;
  REQUIRE(deserialize_cache(text, back, reason));
  CHECK(serialize_cache(back) == text);

  // A consistent checksum over inconsistent data is still rejected.
  std::string tampered = text.substr(0, text.rfind("checksum "));
  const auto pos = tampered.find(" 1\n");
  tampered.replace(pos, 3, " 2\n");
  boost::crc_32_type crc;
  crc.process_bytes(tampered.data(), tampered.size());
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", crc.checksum());
  tampered += std::string("checksum ") + buf + "\n";
  WeightSystemCache none;
  CHECK_FALSE(deserialize_cache(tampered, none, reason));
  CHECK(none.size() == 0);
  CHECK_FALSE(deserialize_cache("garbage", none, reason));
}

#include "lieconv/cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "CLI11.hpp"

#include "lieconv/charmult.hpp"
#include "lieconv/cli/cache.hpp"
#include "lieconv/cli/config.hpp"
#include "lieconv/cli/notation.hpp"
#include "lieconv/cli/records.hpp"
#include "lieconv/convexity.hpp"
#include "lieconv/error.hpp"
#include "lieconv/lrcomb.hpp"

namespace lieconv::cli {

namespace {

struct Options {
  std::string config_file;
  std::optional<std::string> output;
  std::optional<std::string> cache_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> dimension_ceiling;
  std::optional<std::int64_t> instance_budget;
  std::optional<unsigned> workers;
  bool timing = false;

  std::string rs;
  std::vector<std::string> weights;
  std::vector<std::string> partitions;
  bool use_oracle = false;
  std::size_t r = 0;
  std::int64_t bound = 0;
  std::optional<std::int64_t> random_count;
  std::int64_t m_max = 1;
  std::size_t n = 0;
};

std::vector<Weight> parse_weights(const RootSystem& rs, const std::vector<std::string>& texts) {
  std::vector<Weight> out;
  for (const auto& t : texts) {
    Weight w = parse_weight(rs, t);
    if (!is_dominant(rs, w)) throw ParseError(t, 0, "weight must be dominant (all coordinates >= 0)");
    out.push_back(std::move(w));
  }
  return out;
}

class Runner {
 public:
  Runner(const Options& opt, const Config& cfg, std::ostream& out) : opt_(opt), cfg_(cfg), out_(out) {}

  int decompose() {
    const RootSystem rs = parse_root_system(opt_.rs);
    const auto factors = parse_weights(rs, opt_.weights);
    if (factors.empty()) throw ParseError(opt_.rs, opt_.rs.size(), "expected at least one weight");
    const Decomposition d = opt_.use_oracle ? character_product_oracle(rs, factors, cfg_.dimension_ceiling)
                                            : tensor_decompose_multi(rs, factors);
    if (structured()) {
      emit(to_record(rs, DecompositionRecord{rs.name(), factors, d}));
    } else {
      for (const auto& [w, m] : display_order(rs, d)) out_ << w.str() << " x" << m << '\n';
    }
    return kExitOk;
  }

  int check_convexity() {
    const RootSystem rs = parse_root_system(opt_.rs);
    const auto factors = parse_weights(rs, opt_.weights);
    if (factors.empty()) throw ParseError(opt_.rs, opt_.rs.size(), "expected at least one weight");
    return report(scan_instance(rs, factors));
  }

  int scan_convexity() {
    const RootSystem rs = parse_root_system(opt_.rs);
    ScanMode mode = ScanMode::exhaustive();
    if (opt_.random_count) {
      if (!cfg_.seed) throw InvalidArgument("random mode needs a seed (--seed or 'seed' in the config file)");
      mode = ScanMode::random(*cfg_.seed, *opt_.random_count);
    }
    return report(scan_family(rs, opt_.r, opt_.bound, mode, {cfg_.instance_budget, cfg_.workers}));
  }

  int lr() {
    const auto lam = parse_partition(opt_.partitions.at(0));
    const auto mu = parse_partition(opt_.partitions.at(1));
    const auto nu = parse_partition(opt_.partitions.at(2));
    return integer("lr_coefficient", {lam, mu, nu}, lr_coefficient(lam, mu, nu));
  }

  int kostka_cmd() {
    const auto shape = parse_partition(opt_.partitions.at(0));
    const auto content = parse_partition(opt_.partitions.at(1));
    return integer("kostka", {shape, content}, kostka(shape, content));
  }

  int saturation() {
    const RootSystem rs = parse_root_system(opt_.rs);
    const auto factors = parse_weights(rs, opt_.weights);
    if (factors.empty()) throw ParseError(opt_.rs, opt_.rs.size(), "expected at least one weight");
    const auto profile = saturation_probe(rs, factors, opt_.m_max);
    const bool broken = breaks_saturation(profile);
    if (structured()) {
      emit(to_record(SaturationRecord{rs.name(), factors, profile}));
    } else {
      for (const auto& [m, d] : profile) out_ << "m=" << m << ": " << d << '\n';
      if (broken) out_ << "saturation fails: invariants at some m > 1 but none at m = 1\n";
    }
    // Saturation is a theorem in type A; elsewhere a failure is an expected outcome.
    return broken && rs.family() == Family::A ? kExitViolation : kExitOk;
  }

  int prv() {
    const RootSystem rs = parse_root_system(opt_.rs);
    const auto ws = parse_weights(rs, opt_.weights);
    if (ws.size() != 2) throw ParseError(opt_.rs, opt_.rs.size(), "prv takes exactly two weights");
    const auto comps = prv_components(rs, ws[0], ws[1]);
    const auto product = tensor_decompose(rs, ws[0], ws[1]);
    bool missing = false;
    PrvRecord rec{rs.name(), ws[0], ws[1], {}};
    for (const auto& c : comps) {
      const auto m = product.multiplicity(c);
      rec.components.emplace_back(c, m);
      if (m == 0) missing = true;
    }
    if (structured()) {
      emit(to_record(rec));
    } else {
      Decomposition order;
      for (const auto& c : comps) order.add(c, 1);
      for (const auto& [w, one] : display_order(rs, order)) {
        const auto m = product.multiplicity(w);
        if (m > 0)
          out_ << w.str() << " occurs x" << m << '\n';
        else
          out_ << w.str() << " MISSING\n";
      }
    }
    return missing ? kExitViolation : kExitOk;
  }

  int branch() {
    const auto p = parse_partition(opt_.partitions.at(0));
    if (opt_.n < 1) throw InvalidArgument("--n must be at least 1");
    const auto parts = branch_gl_to_gl(p, opt_.n);
    if (structured()) {
      emit(to_record(BranchRecord{p, opt_.n, parts}));
    } else {
      for (const auto& b : parts) out_ << (opt_.n > 1 ? b.str(opt_.n - 1) : std::string("()")) << '\n';
    }
    return kExitOk;
  }

 private:
  bool structured() const { return cfg_.output == OutputFormat::Structured; }
  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  int integer(const char* kind, std::vector<Partition> inputs, std::int64_t value) {
    if (structured())
      emit(to_record(IntegerRecord{kind, std::move(inputs), value}));
    else
      out_ << value << '\n';
    return kExitOk;
  }

  int report(const ScanReport& r) {
    if (structured()) {
      for (const auto& v : r.violations) emit(to_record(v));
      emit(scan_summary_record(r, opt_.timing));
    } else {
      for (const auto& v : r.violations) {
        out_ << "violation: " << v.instance << " base=" << v.line.base.str() << " dir=" << v.line.direction.str()
             << " k=" << v.line.steps << " occ=[";
        for (std::size_t i = 0; i < v.line.occupancies.size(); ++i)
          out_ << (i ? "," : "") << v.line.occupancies[i];
        out_ << "]\n";
      }
      out_ << r.instances_checked << " instances, " << r.violations.size() << " violations\n";
      if (opt_.timing)
        out_ << "elapsed: " << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << " ms\n";
    }
    return r.violations.empty() ? kExitOk : kExitViolation;
  }

  const Options& opt_;
  const Config& cfg_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const GetEnv& getenv_fn) {
  Options opt;
  CLI::App app{"Tensor product supports, weight multiplicities and LR/Kostka numbers for types A and B", "lieconv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_extras();
  app.add_option("--config", opt.config_file, "key = value config file");
  app.add_option("--output", opt.output, "text or structured");
  app.add_option("--cache", opt.cache_path, "persistent weight-system cache file");
  app.add_option("--seed", opt.seed, "seed for random scans");
  app.add_option("--dimension-ceiling", opt.dimension_ceiling, "largest product dimension for the character oracle");
  app.add_option("--instance-budget", opt.instance_budget, "largest number of scan instances");
  app.add_option("--workers", opt.workers, "scan worker threads");
  app.add_flag("--timing", opt.timing, "include elapsed time in scan reports");

  auto* dec = app.add_subcommand("decompose", "decompose a tensor product: decompose A2 [1,0] [0,1]");
  dec->add_option("rs", opt.rs, "root system, e.g. A2")->required();
  // Weights are taken from the unmatched arguments: CLI11 would otherwise
  // split "[1,0]" into a list.
  dec->allow_extras();
  dec->usage("lieconv decompose [OPTIONS] rs weight...");
  dec->add_flag("--oracle", opt.use_oracle, "use the character-product oracle instead of Klimyk");

  auto* chk = app.add_subcommand("check-convexity", "scan one tensor product for lattice-line violations");
  chk->add_option("rs", opt.rs, "root system")->required();
  chk->allow_extras();
  chk->usage("lieconv check-convexity [OPTIONS] rs weight...");

  auto* scan = app.add_subcommand("scan-convexity", "scan all r-fold products with coordinates <= bound");
  scan->add_option("rs", opt.rs, "root system")->required();
  scan->add_option("--r", opt.r, "number of factors")->required();
  scan->add_option("--bound", opt.bound, "coordinate bound")->required();
  scan->add_option("--random", opt.random_count, "sample this many instances instead");

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient: lr 2,1 2,1 3,2,1");
  lr->add_option("partitions", opt.partitions, "lambda mu nu")->expected(3)->required();

  auto* ko = app.add_subcommand("kostka", "Kostka number: kostka 2,1 1,1,1");
  ko->add_option("partitions", opt.partitions, "shape content")->expected(2)->required();

  auto* sat = app.add_subcommand("saturation", "invariants of stretched products: saturation B3 [1,0,0] ... --mmax 2");
  sat->add_option("rs", opt.rs, "root system")->required();
  sat->allow_extras();
  sat->usage("lieconv saturation [OPTIONS] rs weight... --mmax M");
  sat->add_option("--mmax", opt.m_max, "largest stretch factor")->required();

  auto* prv = app.add_subcommand("prv", "PRV components and their multiplicities: prv A2 [1,1] [1,1]");
  prv->add_option("rs", opt.rs, "root system")->required();
  prv->allow_extras();
  prv->usage("lieconv prv [OPTIONS] rs lambda mu");

  auto* br = app.add_subcommand("branch", "GL(n) -> GL(n-1) restriction: branch 2,1,0 --n 3");
  br->add_option("partition", opt.partitions, "partition with at most n parts")->expected(1)->required();
  br->add_option("--n", opt.n, "restrict from GL(n)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto extras = app.remaining(true);
  bool takes_weights = false;
  for (const CLI::App* sub : {dec, chk, sat, prv}) {
    if (!*sub) continue;
    takes_weights = true;
    opt.weights = extras;
    if (opt.weights.empty()) {
      err << "error: " << sub->get_name() << " needs at least one weight\n";
      return kExitUsage;
    }
  }
  if (!takes_weights && !extras.empty()) {
    err << "error: unexpected argument " << extras.front() << "\n";
    return kExitUsage;
  }

  Config cfg;
  try {
    apply_environment(cfg, getenv_fn);
    if (!opt.config_file.empty()) apply_config_file(cfg, opt.config_file);
    if (opt.output) cfg.output = parse_output_format(*opt.output);
    if (opt.cache_path) cfg.cache_path = opt.cache_path;
    if (opt.seed) cfg.seed = opt.seed;
    if (opt.dimension_ceiling) cfg.dimension_ceiling = *opt.dimension_ceiling;
    if (opt.instance_budget) cfg.instance_budget = *opt.instance_budget;
    if (opt.workers) cfg.workers = *opt.workers;
    cfg.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto& cache = default_weight_cache();
  if (cfg.cache_path) load_cache_file(*cfg.cache_path, cache, err);
  cache.mark_clean();

  Runner runner(opt, cfg, out);
  int code = kExitOk;
  try {
    if (*dec)
      code = runner.decompose();
    else if (*chk)
      code = runner.check_convexity();
    else if (*scan)
      code = runner.scan_convexity();
    else if (*lr)
      code = runner.lr();
    else if (*ko)
      code = runner.kostka_cmd();
    else if (*sat)
      code = runner.saturation();
    else if (*prv)
      code = runner.prv();
    else if (*br)
      code = runner.branch();
  } catch (const ParseError& e) {
    err << e.pretty() << "\n";
    code = kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    code = kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitResource;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    code = kExitViolation;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    code = kExitResource;
  }

  if (cfg.cache_path && cache.dirty_count() > 0) {
    save_cache_file(*cfg.cache_path, cache, err);
    cache.mark_clean();
  }
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, out, err, [](const char* name) { return std::getenv(name); });
}

}  // namespace lieconv::cli

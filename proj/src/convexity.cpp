#include "lieconv/convexity.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "lieconv/error.hpp"
#include "lieconv/lrcomb.hpp"

namespace lieconv {

std::string to_string(LineClass c) {
  switch (c) {
    case LineClass::ConvexOk:
      return "CONVEX-OK";
    case LineClass::Vacuous:
      return "VACUOUS";
    case LineClass::Violation:
      return "VIOLATION";
  }
  return "?";
}

LineClass LineWitness::classify() const {
  if (occupancies.empty() || occupancies.front() == 0 || occupancies.back() == 0) return LineClass::Vacuous;
  for (auto o : occupancies)
    if (o == 0) return LineClass::Violation;
  return LineClass::ConvexOk;
}

void ScanReport::merge(ScanReport&& other) {
  instances_checked += other.instances_checked;
  lines_checked += other.lines_checked;
  violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
  elapsed += other.elapsed;
}

void ScanReport::canonicalize() {
  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    if (a.instance_index != b.instance_index) return a.instance_index < b.instance_index;
    return a.line < b.line;
  });
}

bool ScanReport::same_outcome(const ScanReport& o) const {
  return instances_checked == o.instances_checked && lines_checked == o.lines_checked && violations == o.violations;
}

std::vector<Weight> support(const Decomposition& d) {
  std::vector<Weight> out;
  out.reserve(d.size());
  for (const auto& [w, m] : d.terms()) out.push_back(w);
  return out;
}

LineWitness check_line(const RootSystem& rs, const Decomposition& d, const Weight& base, const Weight& direction,
                       std::int64_t steps) {
  if (steps < 1) throw InvalidArgument("line needs k >= 1, got " + std::to_string(steps));
  if (!in_root_lattice(rs, direction))
    throw InvalidArgument("direction " + direction.str() + " is not in the root lattice of " + rs.name());
  const Weight end = base + steps * direction;
  if (!is_dominant(rs, base) || !is_dominant(rs, end))
    throw InvalidArgument("line endpoints " + base.str() + " and " + end.str() + " must be dominant");
  LineWitness line{base, direction, steps, {}};
  line.occupancies.reserve(static_cast<std::size_t>(steps) + 1);
  Weight w = base;
  for (std::int64_t l = 0; l <= steps; ++l, w += direction) line.occupancies.push_back(d.multiplicity(w));
  return line;
}

std::vector<LineWitness> support_lines(const RootSystem& rs, const Decomposition& d) {
  const auto pts = support(d);
  std::vector<std::int64_t> heights;
  heights.reserve(pts.size());
  for (const auto& p : pts) {
    auto x = rs.scaled_simple_coords(p);
    heights.push_back(std::accumulate(x.begin(), x.end(), std::int64_t{0}));
  }
  std::vector<LineWitness> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      // pts is sorted, so pts[i] < pts[j] lexicographically.
      const bool i_low = heights[i] <= heights[j];
      const Weight& lo = i_low ? pts[i] : pts[j];
      const Weight& hi = i_low ? pts[j] : pts[i];
      const Weight diff = hi - lo;
      auto coords = root_lattice_coords(rs, diff);
      if (!coords)
        throw InternalError("support points " + lo.str() + " and " + hi.str() + " differ by a non-root-lattice weight");
      std::int64_t g = 0;
      for (auto c : *coords) g = std::gcd(g, c);
      for (std::int64_t k = 2; k <= g; ++k) {
        if (g % k != 0) continue;
        Weight gamma = diff;
        for (std::size_t t = 0; t < gamma.rank(); ++t) gamma[t] /= k;
        out.push_back(check_line(rs, d, lo, gamma, k));
      }
    }
  }
  return out;
}

std::vector<LineWitness> convexity_violations(const RootSystem& rs, const Decomposition& d) {
  std::vector<LineWitness> out;
  for (auto& line : support_lines(rs, d))
    if (line.classify() == LineClass::Violation) out.push_back(std::move(line));
  return out;
}

bool is_lattice_convex(const RootSystem& rs, std::span<const Weight> points) {
  // Points in different cosets of the root lattice are joined by no line.
  std::vector<Decomposition> classes;
  for (const auto& p : points) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const Decomposition& c) { return in_root_lattice(rs, p - c.terms().begin()->first); });
    if (it == classes.end()) {
      classes.emplace_back();
      it = std::prev(classes.end());
    }
    if (it->multiplicity(p) == 0) it->add(p, 1);
  }
  return std::all_of(classes.begin(), classes.end(),
                     [&](const Decomposition& c) { return convexity_violations(rs, c).empty(); });
}

std::string describe_instance(const RootSystem& rs, std::span<const Weight> factors) {
  std::string s = rs.name();
  for (const auto& f : factors) s += " " + f.str();
  return s;
}

ScanReport scan_instance(const RootSystem& rs, std::span<const Weight> factors, std::int64_t instance_index) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  const auto d = tensor_decompose_multi(rs, factors);
  const auto lines = support_lines(rs, d);
  report.instances_checked = 1;
  report.lines_checked = static_cast<std::int64_t>(lines.size());
  for (const auto& line : lines)
    if (line.classify() == LineClass::Violation)
      report.violations.push_back(Violation{instance_index, describe_instance(rs, factors), line});
  report.canonicalize();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<std::vector<Weight>> family_instances(const RootSystem& rs, std::size_t r, std::int64_t bound,
                                                  const ScanMode& mode, std::int64_t instance_budget) {
  if (r < 2) throw InvalidArgument("scan_family needs r >= 2");
  if (bound < 0) throw InvalidArgument("coefficient bound must be non-negative");
  const std::size_t slots = r * rs.rank();
  std::vector<std::vector<Weight>> out;
  auto make = [&](const std::vector<std::int64_t>& digits) {
    std::vector<Weight> inst;
    for (std::size_t f = 0; f < r; ++f)
      inst.emplace_back(std::span<const std::int64_t>(digits.data() + f * rs.rank(), rs.rank()));
    return inst;
  };

  if (mode.kind == ScanMode::Kind::Exhaustive) {
    BigInt total = 1;
    for (std::size_t s = 0; s < slots; ++s) total *= (bound + 1);
    if (total > instance_budget)
      throw ResourceError("instance budget exceeded: " + total.str() + " instances > " +
                          std::to_string(instance_budget));
    std::vector<std::int64_t> digits(slots, 0);
    for (;;) {
      out.push_back(make(digits));
      std::size_t pos = slots;
      while (pos > 0) {
        --pos;
        if (digits[pos] < bound) {
          ++digits[pos];
          break;
        }
        digits[pos] = 0;
      }
      if (pos == 0 && std::all_of(digits.begin(), digits.end(), [](auto v) { return v == 0; })) break;
    }
    return out;
  }

  if (mode.count < 0) throw InvalidArgument("random scan count must be non-negative");
  if (mode.count > instance_budget)
    throw ResourceError("instance budget exceeded: " + std::to_string(mode.count) + " instances > " +
                        std::to_string(instance_budget));
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<std::int64_t> coord(0, bound);
  std::vector<std::int64_t> digits(slots);
  for (std::int64_t i = 0; i < mode.count; ++i) {
    for (auto& d : digits) d = coord(rng);
    out.push_back(make(digits));
  }
  return out;
}

ScanReport scan_family(const RootSystem& rs, std::size_t r, std::int64_t bound, const ScanMode& mode,
                       const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto instances = family_instances(rs, r, bound, mode, options.instance_budget);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(instances.size())));

  std::vector<ScanReport> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < instances.size();)
        partial[id].merge(scan_instance(rs, instances[i], static_cast<std::int64_t>(i)));
    } catch (...) {
      errors[id] = std::current_exception();
      next = instances.size();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ScanReport report;
  for (auto& p : partial) report.merge(std::move(p));
  report.canonicalize();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<std::pair<std::int64_t, std::int64_t>> saturation_probe(const RootSystem& rs,
                                                                    std::span<const Weight> factors,
                                                                    std::int64_t m_max) {
  if (factors.empty()) throw InvalidArgument("saturation probe needs at least one factor");
  if (m_max < 1) throw InvalidArgument("saturation probe needs m_max >= 1");
  Weight sum = Weight::zero(rs.rank());
  for (const auto& f : factors) sum += f;
  const bool in_lattice = in_root_lattice(rs, sum);

  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    std::vector<Weight> stretched;
    for (const auto& f : factors) stretched.push_back(m * f);
    const std::int64_t dim = invariant_dimension(rs, stretched);
    // Off the root lattice, only stretches that land in it can carry invariants.
    if (!in_lattice && dim != 0 && !in_root_lattice(rs, m * sum))
      throw InternalError("invariants found for a weight sum outside the root lattice");
    out.emplace_back(m, dim);
  }
  return out;
}

bool breaks_saturation(std::span<const std::pair<std::int64_t, std::int64_t>> profile) {
  bool first_zero = false, any_positive = false;
  for (const auto& [m, d] : profile) {
    if (m == 1 && d == 0) first_zero = true;
    if (d > 0) any_positive = true;
  }
  return first_zero && any_positive;
}

std::set<Weight> prv_components(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  if (!is_dominant(rs, lambda) || !is_dominant(rs, mu))
    throw InvalidArgument("PRV components need dominant weights, got " + lambda.str() + " and " + mu.str());
  std::set<Weight> out;
  for (const auto& w : weyl_orbit(rs, mu)) out.insert(to_dominant(rs, lambda + w).dominant);
  return out;
}

std::vector<std::size_t> log_concavity_scan(std::span<const std::int64_t> occ) {
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l + 1 < occ.size(); ++l) {
    const __int128 mid = static_cast<__int128>(occ[l]) * occ[l];
    const __int128 ends = static_cast<__int128>(occ[l - 1]) * occ[l + 1];
    if (mid < ends) out.push_back(l);
  }
  return out;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept { return boost::hash_range(v.begin(), v.end()); }
};

void compositions(std::int64_t total, std::size_t parts, std::vector<std::int64_t>& cur,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::int64_t v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

KostkaConcavityReport scan_kostka_log_concavity(std::int64_t max_size) {
  KostkaConcavityReport report;
  for (std::int64_t size = 1; size <= max_size; ++size) {
    const auto n = static_cast<std::size_t>(size);
    std::vector<std::vector<std::int64_t>> contents;
    std::vector<std::int64_t> cur;
    compositions(size, n, cur, contents);
    for (const auto& shape : partitions_of(size, n)) {
      // Kostka numbers are symmetric in the content.
      std::unordered_map<std::vector<std::int64_t>, std::int64_t, VecHash> memo;
      auto k = [&](std::vector<std::int64_t> content) {
        std::sort(content.begin(), content.end(), std::greater<>());
        auto [it, fresh] = memo.try_emplace(content, 0);
        if (fresh) it->second = kostka(shape, content);
        return it->second;
      };
      for (const auto& mu : contents) {
        const std::int64_t center = k(mu);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            if (mu[i] == 0 || mu[j] == 0) continue;  // mu +- (e_i - e_j) must stay a content
            auto plus = mu, minus = mu;
            ++plus[i];
            --plus[j];
            --minus[i];
            ++minus[j];
            ++report.checks;
            const std::int64_t occ[3] = {k(minus), center, k(plus)};
            if (!log_concavity_scan(occ).empty()) report.failures.push_back({shape, mu, i, j});
          }
      }
    }
  }
  return report;
}

}  // namespace lieconv

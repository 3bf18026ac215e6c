#include "lieconv/lrcomb.hpp"

#include <algorithm>
#include <numeric>

#include "lieconv/error.hpp"

namespace lieconv {

SkewShape::SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner)) throw InvalidArgument("skew shape " + outer.str() + "/" + inner.str() + " is not valid");
}

bool Tableau::rows_weakly_increase() const {
  for (const auto& row : rows)
    if (!std::is_sorted(row.begin(), row.end())) return false;
  return true;
}

bool Tableau::columns_strictly_increase() const {
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto top0 = shape.inner[r - 1];
    const auto bot0 = shape.inner[r];
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      const std::int64_t col = bot0 + static_cast<std::int64_t>(k);
      if (col < top0 || col >= shape.outer[r - 1]) continue;
      if (rows[r - 1][static_cast<std::size_t>(col - top0)] >= rows[r][k]) return false;
    }
  }
  return true;
}

bool Tableau::is_lattice() const {
  std::vector<std::int64_t> seen;
  for (const auto& row : rows)
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const auto v = static_cast<std::size_t>(*it);
      if (seen.size() < v + 1) seen.resize(v + 1, 0);
      ++seen[v];
      if (v >= 2 && seen[v] > seen[v - 1]) return false;
    }
  return true;
}

std::vector<std::int64_t> Tableau::content() const {
  std::vector<std::int64_t> out;
  for (const auto& row : rows)
    for (auto v : row) {
      if (out.size() < static_cast<std::size_t>(v)) out.resize(static_cast<std::size_t>(v), 0);
      ++out[static_cast<std::size_t>(v - 1)];
    }
  return out;
}

namespace {

// Fills rows top to bottom. Within a row the entries are weakly increasing,
// so a row is determined by how many copies of each value it holds.
class Filler {
 public:
  Filler(const SkewShape& shape, std::span<const std::int64_t> content, bool lattice,
         const std::function<bool(const Tableau&)>& visit)
      : content_(content.begin(), content.end()),
        lattice_(lattice),
        visit_(visit),
        tableau_{shape, {}},
        rows_(shape.outer.length()),
        used_(content.size() + 1, 0),
        row_count_(content.size() + 1, 0) {
    tableau_.rows.resize(rows_);
    in_ = shape.inner.padded(std::max(rows_, shape.inner.length()));
    out_ = shape.outer.padded(rows_);
  }

  void run() { fill_row(0); }

 private:
  void fill_row(std::size_t r) {
    if (stopped_) return;
    if (r == rows_) {
      for (std::size_t v = 1; v < used_.size(); ++v)
        if (used_[v] != content_[v - 1]) return;
      if (!visit_(tableau_)) stopped_ = true;
      return;
    }
    tableau_.rows[r].clear();
    std::fill(row_count_.begin(), row_count_.end(), 0);
    fill_value(r, 1, 0);
  }

  void fill_value(std::size_t r, std::size_t v, std::int64_t placed) {
    if (stopped_) return;
    const std::int64_t width = out_[r] - in_[r];
    if (placed == width) {
      auto saved = row_count_;
      fill_row(r + 1);
      row_count_ = std::move(saved);
      return;
    }
    if (v >= used_.size()) return;

    std::int64_t max_count = std::min(width - placed, content_[v - 1] - used_[v]);
    if (lattice_ && v >= 2) {
      // Reading right to left, this row's v's come before its (v-1)'s.
      const std::int64_t prev_below = used_[v - 1] - row_count_[v - 1];
      max_count = std::min(max_count, prev_below - used_[v]);
    }
    // Column strictness against the row above.
    std::int64_t allowed = 0;
    while (allowed < max_count) {
      const std::int64_t col = in_[r] + placed + allowed;
      if (r > 0 && col >= in_[r - 1] && col < out_[r - 1]) {
        const auto above = tableau_.rows[r - 1][static_cast<std::size_t>(col - in_[r - 1])];
        if (above >= static_cast<std::int64_t>(v)) break;
      }
      ++allowed;
    }
    auto& row = tableau_.rows[r];
    for (std::int64_t c = allowed; c >= 0; --c) {
      for (std::int64_t k = 0; k < c; ++k) row.push_back(static_cast<std::int64_t>(v));
      used_[v] += c;
      row_count_[v] = c;
      fill_value(r, v + 1, placed + c);
      used_[v] -= c;
      row_count_[v] = 0;
      row.resize(row.size() - static_cast<std::size_t>(c));
      if (stopped_) return;
    }
  }

  std::vector<std::int64_t> content_;
  bool lattice_;
  const std::function<bool(const Tableau&)>& visit_;
  Tableau tableau_;
  std::size_t rows_;
  std::vector<std::int64_t> in_, out_;
  std::vector<std::int64_t> used_;       // indexed by value, all rows so far
  std::vector<std::int64_t> row_count_;  // indexed by value, current row only
  bool stopped_ = false;
};

std::int64_t count_fillings(const SkewShape& shape, std::span<const std::int64_t> content, bool lattice) {
  std::int64_t count = 0;
  enumerate_fillings(shape, content, lattice, [&](const Tableau&) {
    count = checked_add(count, 1);
    return true;
  });
  return count;
}

}  // namespace

void enumerate_fillings(const SkewShape& shape, std::span<const std::int64_t> content, bool lattice,
                        const std::function<bool(const Tableau&)>& visit) {
  std::int64_t total = 0;
  for (auto c : content) {
    if (c < 0) throw InvalidArgument("content entries must be non-negative");
    total = checked_add(total, c);
  }
  if (total != shape.cells()) return;
  Filler(shape, content, lattice, visit).run();
}

std::int64_t kostka(const Partition& shape, std::span<const std::int64_t> content) {
  return count_fillings(SkewShape(shape), content, false);
}

std::int64_t kostka(const Partition& shape, const Partition& content) {
  return kostka(shape, std::span<const std::int64_t>(content.parts()));
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != checked_add(lambda.size(), mu.size())) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  return count_fillings(SkewShape(nu, lambda), mu.parts(), true);
}

std::map<Partition, std::int64_t> lr_product(const Partition& lambda, const Partition& mu, std::size_t n) {
  if (lambda.length() > n || mu.length() > n)
    throw InvalidArgument("partitions " + lambda.str() + " and " + mu.str() + " must have at most " +
                          std::to_string(n) + " parts");
  const std::int64_t total = checked_add(lambda.size(), mu.size());
  const auto lam = lambda.padded(n);
  std::map<Partition, std::int64_t> out;
  std::vector<std::int64_t> nu(n, 0);
  // nu contains lambda, nu_i <= lambda_i + mu_1, and nu is a partition.
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining, std::int64_t cap) -> void {
    if (i == n) {
      if (remaining != 0) return;
      Partition p(nu);
      if (auto c = lr_coefficient(lambda, mu, p); c > 0) out.emplace(std::move(p), c);
      return;
    }
    const std::int64_t hi = std::min({cap, lam[i] + mu[0], remaining});
    for (std::int64_t v = hi; v >= lam[i]; --v) {
      nu[i] = v;
      self(self, i + 1, remaining - v, v);
    }
  };
  rec(rec, 0, total, total);
  return out;
}

Decomposition lr_decompose(const Partition& lambda, const Partition& mu, std::size_t n) {
  Decomposition d;
  for (const auto& [nu, c] : lr_product(lambda, mu, n)) d.add(partition_to_weight(n, nu), c);
  return d;
}

std::vector<std::pair<std::int64_t, std::int64_t>> stretch_probe(const Partition& lambda, const Partition& mu,
                                                                 const Partition& nu, std::int64_t m_max) {
  if (m_max < 1) throw InvalidArgument("stretch_probe needs m_max >= 1");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t m = 1; m <= m_max; ++m)
    out.emplace_back(m, lr_coefficient(lambda.scaled(m), mu.scaled(m), nu.scaled(m)));
  return out;
}

}  // namespace lieconv

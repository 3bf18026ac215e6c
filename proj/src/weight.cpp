#include "lieconv/weight.hpp"

#include <algorithm>
#include <numeric>

#include <boost/container_hash/hash.hpp>

#include "lieconv/error.hpp"

namespace lieconv {

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], o.coords_[i]);
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords_) c = checked_sub(0, c);
  return r;
}

Weight operator*(std::int64_t s, const Weight& w) {
  Weight r = w;
  for (auto& c : r.coords_) c = checked_mul(s, c);
  return r;
}

std::string Weight::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out + "]";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t seed = w.rank();
  for (auto c : w.coords()) boost::hash_combine(seed, c);
  return seed;
}

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidArgument("partition has a negative part: " + std::to_string(parts_[i]));
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw InvalidArgument("partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

std::int64_t Partition::size() const {
  std::int64_t s = 0;
  for (auto p : parts_) s = checked_add(s, p);
  return s;
}

std::vector<std::int64_t> Partition::padded(std::size_t n) const {
  if (n < parts_.size()) throw InvalidArgument("partition " + str() + " has more than " + std::to_string(n) + " parts");
  std::vector<std::int64_t> out(parts_);
  out.resize(n, 0);
  return out;
}

Partition Partition::scaled(std::int64_t m) const {
  std::vector<std::int64_t> p(parts_);
  for (auto& x : p) x = checked_mul(x, m);
  return Partition(std::move(p));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::str() const { return str(std::max<std::size_t>(parts_.size(), 1)); }

std::string Partition::str(std::size_t n) const {
  auto p = padded(std::max(n, parts_.size()));
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

namespace {

void box_rec(std::size_t rows, std::int64_t cap, std::vector<std::int64_t>& cur, std::vector<Partition>& out) {
  if (cur.size() == rows) {
    out.emplace_back(cur);
    return;
  }
  for (std::int64_t v = 0; v <= cap; ++v) {
    cur.push_back(v);
    box_rec(rows, v, cur, out);
    cur.pop_back();
  }
}

void sum_rec(std::int64_t remaining, std::size_t rows, std::int64_t cap, std::vector<std::int64_t>& cur,
             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() == rows) return;
  for (std::int64_t v = std::min(cap, remaining); v >= 1; --v) {
    cur.push_back(v);
    sum_rec(remaining - v, rows, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(std::size_t rows, std::int64_t max_part) {
  std::vector<Partition> out;
  std::vector<std::int64_t> cur;
  box_rec(rows, max_part, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(std::int64_t total, std::size_t rows) {
  std::vector<Partition> out;
  std::vector<std::int64_t> cur;
  sum_rec(total, rows, total, cur, out);
  return out;
}

}  // namespace lieconv

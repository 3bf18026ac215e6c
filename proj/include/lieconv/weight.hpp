#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace lieconv {

/// Integer vector in the fundamental-weight basis of some root system.
/// Carries no reference to its root system; operations that need one
/// check the length themselves.
class Weight {
 public:
  using Coords = boost::container::small_vector<std::int64_t, 8>;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  Weight(std::initializer_list<std::int64_t> c) : coords_(c.begin(), c.end()) {}
  explicit Weight(std::span<const std::int64_t> c) : coords_(c.begin(), c.end()) {}

  static Weight zero(std::size_t rank) { return Weight(rank); }
  static Weight unit(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w.coords_[i] = 1;
    return w;
  }

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return {coords_.data(), coords_.size()}; }

  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight operator-() const;
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t s, const Weight& w);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

  /// `[1,0,-2]`
  std::string str() const;

 private:
  Coords coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Non-increasing list of non-negative integers, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are non-increasing and non-negative.
  explicit Partition(std::vector<std::int64_t> parts);
  Partition(std::initializer_list<std::int64_t> parts)
      : Partition(std::vector<std::int64_t>(parts)) {}

  /// Number of nonzero parts.
  std::size_t length() const { return parts_.size(); }
  std::int64_t size() const;
  bool empty() const { return parts_.empty(); }
  /// i-th part, 0 past the end.
  std::int64_t operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  const std::vector<std::int64_t>& parts() const { return parts_; }
  /// Parts padded with zeros to exactly n entries (n >= length()).
  std::vector<std::int64_t> padded(std::size_t n) const;

  Partition scaled(std::int64_t m) const;
  bool contains(const Partition& inner) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// `2,1` (empty partition prints as `0`).
  std::string str() const;
  /// Comma list padded to n parts: `2,1,0`.
  std::string str(std::size_t n) const;

 private:
  std::vector<std::int64_t> parts_;
};

/// All partitions fitting in a rows x max_part box, in lexicographic order.
std::vector<Partition> partitions_in_box(std::size_t rows, std::int64_t max_part);

/// All partitions of `total` with at most `rows` parts.
std::vector<Partition> partitions_of(std::int64_t total, std::size_t rows);

}  // namespace lieconv

template <>
struct std::hash<lieconv::Weight> : lieconv::WeightHash {};

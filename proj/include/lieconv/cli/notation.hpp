#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieconv/rootdata.hpp"

namespace lieconv::cli {

/// Malformed user input. `position` is the offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string input, std::size_t position, const std::string& message)
      : std::runtime_error(message), input_(std::move(input)), position_(position) {}

  const std::string& input() const { return input_; }
  std::size_t position() const { return position_; }
  /// Message, the input, and a caret under the offending character.
  std::string pretty() const;

 private:
  std::string input_;
  std::size_t position_;
};

/// `A2`, `B3`
RootSystem parse_root_system(const std::string& text);
/// `[1,0,-2]`, checked against the rank of rs.
Weight parse_weight(const RootSystem& rs, const std::string& text);
/// `[1,0,-2]` of any length.
Weight parse_weight(const std::string& text);
/// `2,1,0`; a lone `0` is the empty partition.
Partition parse_partition(const std::string& text);

/// `A2 [1,1]`
std::string format_weight(const RootSystem& rs, const Weight& w);

}  // namespace lieconv::cli

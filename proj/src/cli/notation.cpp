#include "lieconv/cli/notation.hpp"

#include <cctype>
#include <charconv>

#include "lieconv/error.hpp"

namespace lieconv::cli {

std::string ParseError::pretty() const {
  std::string s = "error: ";
  s += what();
  s += "\n  " + input_ + "\n  " + std::string(std::min(position_, input_.size()), ' ') + "^";
  return s;
}

namespace {

// Reads a signed integer at text[pos], advancing pos.
std::int64_t read_int(const std::string& text, std::size_t& pos) {
  const std::size_t start = pos;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) throw ParseError(text, start, "integer out of range");
  if (ec != std::errc() || ptr == text.data() + pos) throw ParseError(text, start, "expected an integer");
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

void skip_spaces(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

std::vector<std::int64_t> read_list(const std::string& text, std::size_t& pos) {
  std::vector<std::int64_t> out;
  for (;;) {
    skip_spaces(text, pos);
    out.push_back(read_int(text, pos));
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    return out;
  }
}

}  // namespace

RootSystem parse_root_system(const std::string& text) {
  if (text.empty()) throw ParseError(text, 0, "expected a root system such as A2 or B3");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f != 'A' && f != 'B') throw ParseError(text, 0, "unsupported root system family (expected A or B)");
  std::size_t pos = 1;
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError(text, pos, "expected a rank after the family letter");
  const std::int64_t rank = read_int(text, pos);
  if (pos != text.size()) throw ParseError(text, pos, "unexpected character in root system name");
  try {
    return RootSystem(f == 'A' ? Family::A : Family::B, static_cast<std::size_t>(rank));
  } catch (const InvalidArgument& e) {
    throw ParseError(text, 1, e.what());
  }
}

Weight parse_weight(const std::string& text) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != '[') throw ParseError(text, pos, "expected '[' to start a weight");
  ++pos;
  auto coords = read_list(text, pos);
  if (pos >= text.size() || text[pos] != ']') throw ParseError(text, pos, "expected ',' or ']' in weight");
  ++pos;
  skip_spaces(text, pos);
  if (pos != text.size()) throw ParseError(text, pos, "unexpected text after weight");
  return Weight(std::span<const std::int64_t>(coords));
}

Weight parse_weight(const RootSystem& rs, const std::string& text) {
  Weight w = parse_weight(text);
  if (w.rank() != rs.rank())
    throw ParseError(text, 0,
                     "weight has " + std::to_string(w.rank()) + " coordinates, " + rs.name() + " needs " +
                         std::to_string(rs.rank()));
  return w;
}

Partition parse_partition(const std::string& text) {
  std::size_t pos = 0;
  auto parts = read_list(text, pos);
  if (pos != text.size()) throw ParseError(text, pos, "expected ',' or end of partition");
  pos = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw ParseError(text, pos, "partition parts must be non-negative");
    if (i > 0 && parts[i] > parts[i - 1]) throw ParseError(text, pos, "partition parts must be non-increasing");
    pos = text.find(',', pos);
    pos = pos == std::string::npos ? text.size() : pos + 1;
  }
  return Partition(std::move(parts));
}

std::string format_weight(const RootSystem& rs, const Weight& w) { return rs.name() + " " + w.str(); }

}  // namespace lieconv::cli

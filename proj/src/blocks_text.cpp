#include "blocks_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace nchopf::detail {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int parse_entry(std::string_view token, std::string_view whole) {
  token = trim(token);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("malformed entry '" + std::string(token) + "' in '" +
                     std::string(whole) + "'");
  if (value <= 0)
    throw ParseError("entries must be positive, got " + std::to_string(value));
  return value;
}

}  // namespace

std::vector<Block> parse_blocks(std::string_view text, char open, char close) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.size() < 2 || text.front() != open || text.back() != close)
    throw ParseError("expected '" + std::string(1, open) + "..." +
                     std::string(1, close) + "' but got '" + std::string(whole) +
                     "'");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<Block> blocks;
  if (text.empty()) return blocks;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    const std::string_view part =
        text.substr(start, bar == std::string_view::npos ? text.npos
                                                         : bar - start);
    if (trim(part).empty()) throw ParseError("empty block in '" +
                                             std::string(whole) + "'");
    Block block;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = part.find(',', pos);
      block.push_back(parse_entry(
          part.substr(pos, comma == part.npos ? part.npos : comma - pos),
          whole));
      if (comma == part.npos) break;
      pos = comma + 1;
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return blocks;
}

int validate_cover(const std::vector<Block>& blocks) {
  int n = 0;
  int largest = 0;
  for (const Block& b : blocks) {
    if (b.empty()) throw ParseError("empty block");
    n += static_cast<int>(b.size());
    for (int x : b) {
      if (x <= 0) throw ParseError("entries must be positive");
      largest = std::max(largest, x);
    }
  }
  std::vector<char> seen(largest + 1, 0);
  for (const Block& b : blocks) {
    for (int x : b) {
      if (seen[x]) throw ParseError("duplicate element " + std::to_string(x));
      seen[x] = 1;
    }
  }
  for (int i = 1; i <= n; ++i)
    if (!seen[i])
      throw ParseError("gap: element " + std::to_string(i) +
                       " of {1.." + std::to_string(n) + "} is missing");
  return n;
}

std::string format_blocks(const std::vector<Block>& blocks, char open,
                          char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out += '|';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(blocks[i][j]);
    }
  }
  out += close;
  return out;
}

}  // namespace nchopf::detail

#ifndef NCHOPF_SRC_BLOCKS_TEXT_HPP_
#define NCHOPF_SRC_BLOCKS_TEXT_HPP_

// Shared parsing and validation for the "{..|..}" and "(..|..)" formats.

#include <string>
#include <string_view>
#include <vector>

#include "nchopf/setpart.hpp"

namespace nchopf::detail {

// Splits "<open>b1|b2|...<close>" into blocks of integers, each sorted
// ascending. Block order is preserved.
std::vector<Block> parse_blocks(std::string_view text, char open, char close);

// Throws ParseError unless the blocks are nonempty, disjoint and cover
// exactly {1..n}; returns n.
int validate_cover(const std::vector<Block>& blocks);

std::string format_blocks(const std::vector<Block>& blocks, char open,
                          char close);

}  // namespace nchopf::detail

#endif  // NCHOPF_SRC_BLOCKS_TEXT_HPP_

#include "nchopf/setpart.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "blocks_text.hpp"
#include "nchopf/lyndon.hpp"

namespace nchopf {

namespace {

constexpr int kMaxSize = 255;

void require_same_size(const SetPartition& a, const SetPartition& b,
                       const char* op) {
  if (a.size() != b.size())
    throw SizeMismatch(std::string(op) + ": partitions of [" +
                       std::to_string(a.size()) + "] and [" +
                       std::to_string(b.size()) + "]");
}

}  // namespace

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  if (labels.size() > kMaxSize)
    throw std::length_error("set partitions are limited to n <= 255");
  SetPartition out;
  out.labels_.reserve(labels.size());
  std::map<int, int> renumber;
  for (int label : labels) {
    auto [it, inserted] =
        renumber.emplace(label, static_cast<int>(renumber.size()));
    out.labels_.push_back(static_cast<std::uint8_t>(it->second));
  }
  out.length_ = static_cast<int>(renumber.size());
  return out;
}

SetPartition SetPartition::from_blocks(std::vector<Block> blocks) {
  const int n = detail::validate_cover(blocks);
  std::vector<int> labels(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) labels[x - 1] = static_cast<int>(b);
  return from_labels(labels);
}

SetPartition SetPartition::parse(std::string_view text) {
  return from_blocks(detail::parse_blocks(text, '{', '}'));
}

std::vector<Block> SetPartition::blocks() const {
  std::vector<Block> out(length_);
  for (int i = 0; i < size(); ++i) out[labels_[i]].push_back(i + 1);
  return out;
}

std::string SetPartition::str() const {
  return detail::format_blocks(blocks(), '{', '}');
}

namespace setpart {

namespace {

void grow(int n, std::vector<int>& labels, int used,
          std::vector<SetPartition>& out) {
  if (static_cast<int>(labels.size()) == n) {
    out.push_back(SetPartition::from_labels(labels));
    return;
  }
  for (int b = 0; b <= used; ++b) {
    labels.push_back(b);
    grow(n, labels, std::max(used, b + 1), out);
    labels.pop_back();
  }
}

void sort_canonical(std::vector<SetPartition>& v) {
  std::vector<std::pair<std::string, SetPartition>> keyed;
  keyed.reserve(v.size());
  for (auto& p : v) keyed.emplace_back(p.str(), std::move(p));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::move(keyed[i].second);
}

std::vector<int> block_max(const SetPartition& a) {
  std::vector<int> mx(a.length(), 0);
  for (int i = 1; i <= a.size(); ++i) mx[a.block_of(i)] = i;
  return mx;
}

}  // namespace

const std::vector<SetPartition>& enumerate(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<SetPartition>> cache;
  if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<SetPartition> out;
  std::vector<int> labels;
  grow(n, labels, 0, out);
  sort_canonical(out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<SetPartition> enumerate_by_length(int n, int k) {
  std::vector<SetPartition> out;
  for (const auto& p : enumerate(n))
    if (p.length() == k) out.push_back(p);
  return out;
}

SetPartition meet(const SetPartition& a, const SetPartition& b) {
  require_same_size(a, b, "meet");
  std::vector<int> labels(a.size());
  for (int i = 1; i <= a.size(); ++i)
    labels[i - 1] = a.block_of(i) * (b.length() + 1) + b.block_of(i);
  return SetPartition::from_labels(labels);
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  require_same_size(a, b, "join");
  // Union-find over a's blocks followed by b's blocks.
  std::vector<int> parent(a.length() + b.length());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 1; i <= a.size(); ++i) {
    const int x = find(a.block_of(i));
    const int y = find(a.length() + b.block_of(i));
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<int> labels(a.size());
  for (int i = 1; i <= a.size(); ++i) labels[i - 1] = find(a.block_of(i));
  return SetPartition::from_labels(labels);
}

bool leq(const SetPartition& a, const SetPartition& b) {
  require_same_size(a, b, "leq");
  std::vector<int> target(a.length(), -1);
  for (int i = 1; i <= a.size(); ++i) {
    int& t = target[a.block_of(i)];
    if (t < 0) t = b.block_of(i);
    else if (t != b.block_of(i)) return false;
  }
  return true;
}

SetPartition concat(const SetPartition& a, const SetPartition& b) {
  std::vector<int> labels;
  labels.reserve(a.size() + b.size());
  for (int i = 1; i <= a.size(); ++i) labels.push_back(a.block_of(i));
  for (int i = 1; i <= b.size(); ++i)
    labels.push_back(a.length() + b.block_of(i));
  return SetPartition::from_labels(labels);
}

std::vector<Block> restrict(const SetPartition& a,
                            std::span<const int> subset) {
  std::vector<char> chosen(a.size() + 1, 0);
  for (int x : subset) {
    if (x < 1 || x > a.size())
      throw std::invalid_argument("restrict: " + std::to_string(x) +
                                  " is not in [" + std::to_string(a.size()) +
                                  "]");
    if (chosen[x])
      throw std::invalid_argument("restrict: repeated entry " +
                                  std::to_string(x));
    chosen[x] = 1;
  }
  std::vector<Block> grouped(a.length());
  for (int i = 1; i <= a.size(); ++i)
    if (chosen[i]) grouped[a.block_of(i)].push_back(i);
  std::vector<Block> out;
  for (auto& b : grouped)
    if (!b.empty()) out.push_back(std::move(b));
  return out;
}

SetPartition standardize(const std::vector<Block>& blocks) {
  std::vector<std::pair<int, int>> entries;  // (value, block)
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ParseError("standardize: empty block");
    for (int x : blocks[b]) entries.emplace_back(x, static_cast<int>(b));
  }
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first)
      throw ParseError("standardize: duplicate element " +
                       std::to_string(entries[i].first));
  std::vector<int> labels;
  labels.reserve(entries.size());
  for (const auto& e : entries) labels.push_back(e.second);
  return SetPartition::from_labels(labels);
}

std::vector<Block> raise(const SetPartition& a, std::span<const int> subset) {
  if (static_cast<int>(subset.size()) != a.size())
    throw SizeMismatch("raise: support has " + std::to_string(subset.size()) +
                       " entries, partition has size " +
                       std::to_string(a.size()));
  std::vector<int> support(subset.begin(), subset.end());
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    throw std::invalid_argument("raise: support has a repeated entry");
  std::vector<Block> out(a.length());
  for (int i = 1; i <= a.size(); ++i)
    out[a.block_of(i)].push_back(support[i - 1]);
  return out;
}

std::vector<SetPartition> atomic_split(const SetPartition& a) {
  const std::vector<int> mx = block_max(a);
  std::vector<SetPartition> factors;
  int start = 1;
  int reach = 0;
  for (int r = 1; r <= a.size(); ++r) {
    reach = std::max(reach, mx[a.block_of(r)]);
    if (reach == r) {
      std::vector<int> piece(r - start + 1);
      std::iota(piece.begin(), piece.end(), start);
      factors.push_back(standardize(restrict(a, piece)));
      start = r + 1;
    }
  }
  return factors;
}

bool is_atomic(const SetPartition& a) { return atomic_split(a).size() == 1; }

std::vector<int> split_word(const SetPartition& a) {
  std::vector<int> word;
  word.reserve(a.size());
  int letter = 1;
  for (const auto& f : atomic_split(a)) {
    word.insert(word.end(), f.size(), letter);
    ++letter;
  }
  return word;
}

std::strong_ordering cmp_atoms(const SetPartition& a, const SetPartition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = split_word(a) <=> split_word(b); c != 0) return c;
  // Distinct atoms of equal size and length share the word 1...1; the block
  // labelling makes the order total.
  return a <=> b;
}

std::strong_ordering cmp_length_lex(const SetPartition& a,
                                    const SetPartition& b) {
  const auto fa = atomic_split(a);
  const auto fb = atomic_split(b);
  if (auto c = fa.size() <=> fb.size(); c != 0) return c;
  return lex_compare<SetPartition>(fa, fb, cmp_atoms);
}

bool is_lyndon(const SetPartition& a) {
  const auto factors = atomic_split(a);
  return is_lyndon_word<SetPartition>(factors, cmp_atoms);
}

std::vector<SetPartition> star_covers(const SetPartition& a) {
  const std::vector<int> mx = block_max(a);
  std::vector<int> mn(a.length(), 0);
  for (int i = a.size(); i >= 1; --i) mn[a.block_of(i)] = i;
  std::vector<SetPartition> out;
  std::vector<int> labels(a.size());
  for (int i = 0; i < a.length(); ++i) {
    for (int j = i + 1; j < a.length(); ++j) {
      // Blocks are ordered by minimum, so only max(A_i) < min(A_j) can hold.
      if (mx[i] >= mn[j]) continue;
      for (int x = 1; x <= a.size(); ++x)
        labels[x - 1] = a.block_of(x) == j ? i : a.block_of(x);
      out.push_back(SetPartition::from_labels(labels));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool star_leq(const SetPartition& a, const SetPartition& b) {
  if (!leq(a, b)) return false;
  // Inside each block of b, the blocks of a must not interleave: scanning
  // entries upward, once a block of a is left it is never re-entered.
  std::vector<int> current(b.length(), -1);
  std::vector<char> closed(a.length(), 0);
  for (int x = 1; x <= a.size(); ++x) {
    int& cur = current[b.block_of(x)];
    const int blk = a.block_of(x);
    if (cur == blk) continue;
    if (closed[blk]) return false;
    if (cur >= 0) closed[cur] = 1;
    cur = blk;
  }
  return true;
}

std::vector<SetPartition> star_upset(const SetPartition& a) {
  std::vector<SetPartition> seen{a};
  std::vector<SetPartition> frontier{a};
  while (!frontier.empty()) {
    std::vector<SetPartition> next;
    for (const auto& x : frontier)
      for (auto& y : star_covers(x))
        if (std::find(seen.begin(), seen.end(), y) == seen.end()) {
          seen.push_back(y);
          next.push_back(std::move(y));
        }
    frontier = std::move(next);
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

std::vector<SetPartition> star_downset(const SetPartition& a) {
  std::vector<SetPartition> out;
  for (const auto& b : enumerate(a.size()))
    if (star_leq(b, a)) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> phi_set(const SetPartition& a) {
  const std::vector<int> mx = block_max(a);
  std::vector<int> out;
  for (int i = 1; i <= a.size(); ++i)
    if (mx[a.block_of(i)] != i) out.push_back(i);
  return out;
}

}  // namespace setpart
}  // namespace nchopf

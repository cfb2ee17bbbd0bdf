#include "nchopf/setcomp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "blocks_text.hpp"

namespace nchopf {

namespace {

constexpr int kMaxSize = 255;

void require_same_size(const SetComposition& a, const SetComposition& b,
                       const char* op) {
  if (a.size() != b.size())
    throw SizeMismatch(std::string(op) + ": set compositions of [" +
                       std::to_string(a.size()) + "] and [" +
                       std::to_string(b.size()) + "]");
}

// Part-wise minimum and maximum.
std::pair<std::vector<int>, std::vector<int>> extremes(
    const SetComposition& phi) {
  std::vector<int> mn(phi.length(), 0), mx(phi.length(), 0);
  for (int x = phi.size(); x >= 1; --x) mn[phi.part_of(x)] = x;
  for (int x = 1; x <= phi.size(); ++x) mx[phi.part_of(x)] = x;
  return {mn, mx};
}

// Merges the gaps flagged in `merge` (gap g joins parts g and g+1).
SetComposition merge_gaps(const SetComposition& phi,
                          const std::vector<char>& merge) {
  std::vector<int> target(phi.length());
  int t = 0;
  for (int p = 0; p < phi.length(); ++p) {
    if (p > 0 && !merge[p - 1]) ++t;
    target[p] = t;
  }
  std::vector<int> labels(phi.size());
  for (int x = 1; x <= phi.size(); ++x) labels[x - 1] = target[phi.part_of(x)];
  return SetComposition::from_labels(labels);
}

}  // namespace

SetComposition SetComposition::from_labels(std::span<const int> labels) {
  if (labels.size() > kMaxSize)
    throw std::length_error("set compositions are limited to n <= 255");
  int top = -1;
  for (int l : labels) {
    if (l < 0) throw std::invalid_argument("negative part label");
    top = std::max(top, l);
  }
  std::vector<char> used(top + 1, 0);
  for (int l : labels) used[l] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end())
    throw std::invalid_argument("part labels must be contiguous from 0");
  SetComposition out;
  out.labels_.assign(labels.begin(), labels.end());
  out.length_ = top + 1;
  return out;
}

SetComposition SetComposition::from_blocks(std::vector<Block> blocks) {
  const int n = detail::validate_cover(blocks);
  std::vector<int> labels(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) labels[x - 1] = static_cast<int>(b);
  return from_labels(labels);
}

SetComposition SetComposition::parse(std::string_view text) {
  return from_blocks(detail::parse_blocks(text, '(', ')'));
}

std::vector<Block> SetComposition::blocks() const {
  std::vector<Block> out(length_);
  for (int i = 0; i < size(); ++i) out[labels_[i]].push_back(i + 1);
  return out;
}

std::string SetComposition::str() const {
  return detail::format_blocks(blocks(), '(', ')');
}

int Composition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Composition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Composition Composition::parse(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced '(' in composition");
    s = s.substr(1, s.size() - 2);
  }
  Composition out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok =
        s.substr(pos, comma == std::string::npos ? std::string::npos
                                                 : comma - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed composition part '" + tok + "'");
    }
    if (used != tok.size() || v <= 0)
      throw ParseError("composition parts must be positive integers, got '" +
                       tok + "'");
    out.parts.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

namespace setcomp {

const std::vector<SetComposition>& enumerate(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<SetComposition>> cache;
  if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::pair<std::string, SetComposition>> keyed;
  for (const auto& part : setpart::enumerate(n)) {
    std::vector<int> order(part.length());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> labels(n);
    do {
      for (int x = 1; x <= n; ++x) labels[x - 1] = order[part.block_of(x)];
      auto c = SetComposition::from_labels(labels);
      keyed.emplace_back(c.str(), std::move(c));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SetComposition> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<SetComposition> enumerate_by_length(int n, int k) {
  std::vector<SetComposition> out;
  for (const auto& c : enumerate(n))
    if (c.length() == k) out.push_back(c);
  return out;
}

SetComposition wedge(const SetComposition& phi, const SetComposition& psi) {
  require_same_size(phi, psi, "wedge");
  std::vector<int> keys(phi.size());
  for (int x = 1; x <= phi.size(); ++x)
    keys[x - 1] = phi.part_of(x) * psi.length() + psi.part_of(x);
  std::vector<int> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  for (int& k : keys)
    k = static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), k) -
        distinct.begin());
  return SetComposition::from_labels(keys);
}

bool leq(const SetComposition& phi, const SetComposition& psi) {
  require_same_size(phi, psi, "leq");
  std::vector<int> target(phi.length(), -1);
  for (int x = 1; x <= phi.size(); ++x) {
    int& t = target[phi.part_of(x)];
    if (t < 0) t = psi.part_of(x);
    else if (t != psi.part_of(x)) return false;
  }
  for (int i = 0; i + 1 < phi.length(); ++i)
    if (target[i + 1] != target[i] && target[i + 1] != target[i] + 1)
      return false;
  return true;
}

SetComposition vee(const SetComposition& phi, const SetComposition& psi) {
  require_same_size(phi, psi, "vee");
  // Upper bounds of phi are exactly the merges of consecutive runs of parts.
  const int gaps = std::max(phi.length() - 1, 0);
  std::vector<SetComposition> bounds;
  std::vector<char> merge(gaps);
  for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
    for (int g = 0; g < gaps; ++g) merge[g] = (mask >> g) & 1u;
    SetComposition up = merge_gaps(phi, merge);
    if (leq(psi, up)) bounds.push_back(std::move(up));
  }
  for (const auto& candidate : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](const auto& other) {
          return leq(candidate, other);
        }))
      return candidate;
  }
  throw std::logic_error("vee: no least upper bound for " + phi.str() +
                         " and " + psi.str());
}

SetComposition concat(const SetComposition& phi, const SetComposition& psi) {
  std::vector<int> labels;
  labels.reserve(phi.size() + psi.size());
  for (int x = 1; x <= phi.size(); ++x) labels.push_back(phi.part_of(x));
  for (int x = 1; x <= psi.size(); ++x)
    labels.push_back(phi.length() + psi.part_of(x));
  return SetComposition::from_labels(labels);
}

std::vector<Block> restrict(const SetComposition& phi,
                            std::span<const int> subset) {
  std::vector<char> chosen(phi.size() + 1, 0);
  for (int x : subset) {
    if (x < 1 || x > phi.size())
      throw std::invalid_argument("restrict: " + std::to_string(x) +
                                  " is not in [" + std::to_string(phi.size()) +
                                  "]");
    if (chosen[x])
      throw std::invalid_argument("restrict: repeated entry " +
                                  std::to_string(x));
    chosen[x] = 1;
  }
  std::vector<Block> grouped(phi.length());
  for (int x = 1; x <= phi.size(); ++x)
    if (chosen[x]) grouped[phi.part_of(x)].push_back(x);
  std::vector<Block> out;
  for (auto& b : grouped)
    if (!b.empty()) out.push_back(std::move(b));
  return out;
}

SetComposition standardize(const std::vector<Block>& blocks) {
  std::vector<std::pair<int, int>> entries;
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
  return SetComposition::from_labels(labels);
}

std::vector<Block> raise(const SetComposition& phi,
                         std::span<const int> subset) {
  if (static_cast<int>(subset.size()) != phi.size())
    throw SizeMismatch("raise: support has " + std::to_string(subset.size()) +
                       " entries, composition has size " +
                       std::to_string(phi.size()));
  std::vector<int> support(subset.begin(), subset.end());
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    throw std::invalid_argument("raise: support has a repeated entry");
  std::vector<Block> out(phi.length());
  for (int x = 1; x <= phi.size(); ++x)
    out[phi.part_of(x)].push_back(support[x - 1]);
  return out;
}

SetComposition delta_of_sequence(std::span<const int> gamma) {
  std::vector<int> values(gamma.begin(), gamma.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> labels;
  labels.reserve(gamma.size());
  for (int g : gamma)
    labels.push_back(static_cast<int>(
        std::lower_bound(values.begin(), values.end(), g) - values.begin()));
  return SetComposition::from_labels(labels);
}

Composition alpha(const SetComposition& phi) {
  Composition out;
  out.parts.assign(phi.length(), 0);
  for (int x = 1; x <= phi.size(); ++x) ++out.parts[phi.part_of(x)];
  return out;
}

SetPartition forget(const SetComposition& phi) {
  std::vector<int> labels(phi.size());
  for (int x = 1; x <= phi.size(); ++x) labels[x - 1] = phi.part_of(x);
  return SetPartition::from_labels(labels);
}

std::vector<SetComposition> with_alpha(const Composition& a) {
  std::vector<int> labels;
  for (std::size_t j = 0; j < a.parts.size(); ++j) {
    if (a.parts[j] <= 0)
      throw std::invalid_argument("composition parts must be positive");
    labels.insert(labels.end(), a.parts[j], static_cast<int>(j));
  }
  std::vector<SetComposition> out;
  do {
    out.push_back(SetComposition::from_labels(labels));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetComposition> atomic_split(const SetComposition& phi) {
  const auto parts = phi.blocks();
  std::vector<SetComposition> factors;
  std::size_t start = 0;
  int covered = 0;
  int reach = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    covered += static_cast<int>(parts[p].size());
    reach = std::max(reach, parts[p].back());
    if (reach == covered) {
      factors.push_back(standardize(
          std::vector<Block>(parts.begin() + start, parts.begin() + p + 1)));
      start = p + 1;
    }
  }
  return factors;
}

bool is_atomic(const SetComposition& phi) {
  return atomic_split(phi).size() == 1;
}

std::vector<SetComposition> star_covers(const SetComposition& phi) {
  const auto [mn, mx] = extremes(phi);
  std::vector<SetComposition> out;
  std::vector<char> merge(std::max(phi.length() - 1, 0), 0);
  for (int g = 0; g + 1 < phi.length(); ++g) {
    if (mx[g] >= mn[g + 1]) continue;
    merge[g] = 1;
    out.push_back(merge_gaps(phi, merge));
    merge[g] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool star_leq(const SetComposition& phi, const SetComposition& psi) {
  if (!leq(phi, psi)) return false;
  const auto [mn, mx] = extremes(phi);
  for (int g = 0; g + 1 < phi.length(); ++g) {
    const int here = psi.part_of(mn[g]);
    const int next = psi.part_of(mn[g + 1]);
    if (here == next && mx[g] >= mn[g + 1]) return false;
  }
  return true;
}

std::vector<SetComposition> star_upset(const SetComposition& phi) {
  const auto [mn, mx] = extremes(phi);
  std::vector<int> free_gaps;
  for (int g = 0; g + 1 < phi.length(); ++g)
    if (mx[g] < mn[g + 1]) free_gaps.push_back(g);
  std::vector<SetComposition> out;
  std::vector<char> merge(std::max(phi.length() - 1, 0), 0);
  for (unsigned mask = 0; mask < (1u << free_gaps.size()); ++mask) {
    for (std::size_t i = 0; i < free_gaps.size(); ++i)
      merge[free_gaps[i]] = (mask >> i) & 1u;
    out.push_back(merge_gaps(phi, merge));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetComposition> star_downset(const SetComposition& phi) {
  std::vector<SetComposition> out;
  for (const auto& c : enumerate(phi.size()))
    if (star_leq(c, phi)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

bool sharp_leq(const SetComposition& phi, const SetComposition& psi) {
  require_same_size(phi, psi, "sharp_leq");
  if (alpha(phi) != alpha(psi)) return false;
  const auto parts = psi.blocks();
  std::size_t next = 0;
  for (const auto& factor : atomic_split(phi)) {
    const std::size_t len = factor.length();
    const std::vector<Block> run(parts.begin() + next,
                                 parts.begin() + next + len);
    if (standardize(run) != factor) return false;
    next += len;
  }
  return true;
}

std::vector<SetComposition> sharp_upset(const SetComposition& phi) {
  std::vector<SetComposition> out;
  for (auto& c : with_alpha(alpha(phi)))
    if (sharp_leq(phi, c)) out.push_back(std::move(c));
  return out;
}

int sharp_rank(const SetComposition& phi) {
  return phi.length() - static_cast<int>(atomic_split(phi).size());
}

std::vector<SetComposition> shifted_shuffle(const SetComposition& phi,
                                            const SetComposition& psi) {
  const int l1 = phi.length();
  const int l2 = psi.length();
  std::vector<int> picks(l1 + l2, 0);
  std::fill(picks.begin() + l2, picks.end(), 1);  // 1 = next part of phi
  std::vector<int> target_phi(l1), target_psi(l2);
  std::vector<SetComposition> out;
  std::vector<int> labels(phi.size() + psi.size());
  do {
    int a = 0, b = 0;
    for (int slot = 0; slot < l1 + l2; ++slot) {
      if (picks[slot]) target_phi[a++] = slot;
      else target_psi[b++] = slot;
    }
    for (int x = 1; x <= phi.size(); ++x)
      labels[x - 1] = target_phi[phi.part_of(x)];
    for (int x = 1; x <= psi.size(); ++x)
      labels[phi.size() + x - 1] = target_psi[psi.part_of(x)];
    out.push_back(SetComposition::from_labels(labels));
  } while (std::next_permutation(picks.begin(), picks.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> word(const SetComposition& phi) {
  std::vector<int> w(phi.size());
  for (int x = 1; x <= phi.size(); ++x) w[x - 1] = phi.part_of(x) + 1;
  return w;
}

std::strong_ordering word_lex_cmp(const SetComposition& phi,
                                  const SetComposition& psi) {
  require_same_size(phi, psi, "word_lex_cmp");
  return word(phi) <=> word(psi);
}

SetComposition reverse_complement(const SetComposition& phi) {
  const int n = phi.size();
  std::vector<int> labels(n);
  for (int x = 1; x <= n; ++x)
    labels[n - x] = phi.length() - 1 - phi.part_of(x);
  return SetComposition::from_labels(labels);
}

}  // namespace setcomp
}  // namespace nchopf

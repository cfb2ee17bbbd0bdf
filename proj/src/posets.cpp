#include "nchopf/posets.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "nchopf/setpart.hpp"

namespace nchopf {

FinitePoset FinitePoset::from_predicate(
    std::vector<std::string> labels,
    const std::function<bool(std::size_t, std::size_t)>& leq) {
  FinitePoset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.below_.assign(n, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      p.below_[j][i] = i == j || leq(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.below_[j][i] && p.below_[i][j])
        throw PosetCycleError("not antisymmetric: " + p.labels_[i] +
                              " <= " + p.labels_[j] + " <= " + p.labels_[i]);
  p.finish();
  return p;
}

FinitePoset FinitePoset::from_relations(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  FinitePoset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n) throw std::out_of_range("relation index");
    out[a].push_back(b);
  }

  // Iterative DFS with colours; a grey successor closes a cycle.
  std::vector<int> colour(n, 0);
  std::vector<std::size_t> parent(n, n);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == out[v].size()) {
        colour[v] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t w = out[v][next++];
      if (colour[w] == 1) {
        std::string cycle = p.labels_[w];
        for (std::size_t u = v; u != w && u != n; u = parent[u])
          cycle = p.labels_[u] + " < " + cycle;
        throw PosetCycleError("cycle: " + p.labels_[w] + " < " + cycle);
      }
      if (colour[w] == 0) {
        colour[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }

  p.below_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> todo{i};
    p.below_[i][i] = true;
    while (!todo.empty()) {
      const std::size_t v = todo.back();
      todo.pop_back();
      for (std::size_t w : out[v])
        if (!p.below_[w][i]) {
          p.below_[w][i] = true;
          todo.push_back(w);
        }
    }
  }
  p.finish();
  return p;
}

void FinitePoset::finish() {
  const std::size_t n = labels_.size();
  up_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (below_[j][i]) up_[i].push_back(j);

  covers_.clear();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : up_[i]) {
      if (j == i) continue;
      bool cover = true;
      for (std::size_t k : up_[i])
        if (k != i && k != j && below_[j][k]) {
          cover = false;
          break;
        }
      if (cover) covers_.emplace_back(i, j);
    }

  std::vector<std::size_t> down_size(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : up_[i]) ++down_size[j];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return down_size[a] < down_size[b];
                   });
  std::vector<std::vector<std::size_t>> lower(n);
  for (const auto& [a, b] : covers_) lower[b].push_back(a);
  height_.assign(n, 0);
  for (std::size_t v : order)
    for (std::size_t u : lower[v]) height_[v] = std::max(height_[v], height_[u] + 1);
}

std::optional<std::size_t> FinitePoset::index_of(
    const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> FinitePoset::lower_covers(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : covers_)
    if (b == i) out.push_back(a);
  return out;
}

std::vector<std::size_t> FinitePoset::downset(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < size(); ++k)
    if (below_[i][k]) out.push_back(k);
  return out;
}

std::vector<std::vector<std::size_t>> FinitePoset::components() const {
  const std::size_t n = size();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [a, b] : covers_) root[find(a)] = find(b);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

MoebiusValue FinitePoset::moebius(std::size_t x, std::size_t y) const {
  if (!leq(x, y)) return {0, false};
  std::vector<std::size_t> interval;
  for (std::size_t z : up_[x])
    if (leq(z, y)) interval.push_back(z);
  std::sort(interval.begin(), interval.end(),
            [&](std::size_t a, std::size_t b) {
              if (height_[a] != height_[b]) return height_[a] < height_[b];
              return a < b;
            });
  std::map<std::size_t, Integer> mu;
  for (std::size_t z : interval) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    Integer s = 0;
    for (const auto& [w, v] : mu)
      if (leq(w, z)) s += v;
    mu[z] = -s;
  }
  return {mu[y], true};
}

bool FinitePoset::is_boolean_lattice(
    const std::vector<std::size_t>& elements) const {
  if (elements.empty()) return false;
  std::optional<std::size_t> bottom;
  for (std::size_t m : elements)
    if (std::all_of(elements.begin(), elements.end(),
                    [&](std::size_t e) { return leq(m, e); }))
      bottom = m;
  if (!bottom) return false;
  std::vector<std::size_t> atoms;
  for (std::size_t a : elements) {
    if (a == *bottom) continue;
    const bool atom = std::none_of(
        elements.begin(), elements.end(), [&](std::size_t e) {
          return e != *bottom && e != a && leq(e, a);
        });
    if (atom) atoms.push_back(a);
  }
  if (atoms.size() >= 30 || elements.size() != (std::size_t{1} << atoms.size()))
    return false;
  std::vector<std::uint32_t> mask(elements.size(), 0);
  for (std::size_t e = 0; e < elements.size(); ++e)
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (leq(atoms[k], elements[e])) mask[e] |= std::uint32_t{1} << k;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const bool subset = (mask[a] & ~mask[b]) == 0;
      if (subset != leq(elements[a], elements[b])) return false;
      if (a != b && mask[a] == mask[b]) return false;
    }
  return true;
}

PosetStructure FinitePoset::structure() const {
  PosetStructure s;
  s.rank = height_;
  s.ranked = std::all_of(covers_.begin(), covers_.end(), [&](const auto& c) {
    return height_[c.second] == height_[c.first] + 1;
  });

  s.eulerian = s.ranked;
  if (!s.ranked) s.eulerian_witness = "not ranked";
  for (std::size_t x = 0; x < size() && s.eulerian; ++x)
    for (std::size_t y : up_[x]) {
      if (y == x) continue;
      int balance = 0;
      for (std::size_t z : up_[x])
        if (leq(z, y)) balance += height_[z] % 2 == 0 ? 1 : -1;
      if (balance != 0) {
        s.eulerian = false;
        s.eulerian_witness = "[" + labels_[x] + ", " + labels_[y] + "]";
        break;
      }
    }

  s.boolean_downsets = true;
  for (std::size_t x = 0; x < size(); ++x)
    if (!is_boolean_lattice(downset(x))) {
      s.boolean_downsets = false;
      s.boolean_witness = labels_[x];
      break;
    }
  return s;
}

std::string FinitePoset::to_dot(const std::string& name) const {
  std::string out = "digraph \"" + name + "\" {\n";
  if (size() > 0) {
    out += "  rankdir=BT;\n  node [shape=plaintext];\n";
    const int top = *std::max_element(height_.begin(), height_.end());
    for (int h = 0; h <= top; ++h) {
      out += "  { rank=same;";
      for (std::size_t i = 0; i < size(); ++i)
        if (height_[i] == h) out += " \"" + labels_[i] + "\";";
      out += " }\n";
    }
    for (const auto& [a, b] : covers_)
      out += "  \"" + labels_[a] + "\" -> \"" + labels_[b] + "\";\n";
  }
  out += "}\n";
  return out;
}

std::string FinitePoset::to_json() const {
  nlohmann::ordered_json j;
  j["elements"] = labels_;
  nlohmann::ordered_json covers = nlohmann::ordered_json::array();
  for (const auto& [a, b] : covers_)
    covers.push_back({labels_[a], labels_[b]});
  j["covers"] = std::move(covers);
  j["ranks"] = height_;
  return j.dump(2);
}

namespace posets {

namespace {

template <class T>
std::vector<std::string> labels_of(const std::vector<T>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

template <class T, class Covers>
FinitePoset from_cover_function(const std::vector<T>& xs, Covers covers) {
  std::map<T, std::size_t> index;
  for (std::size_t i = 0; i < xs.size(); ++i) index[xs[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (const auto& y : covers(xs[i])) rel.emplace_back(i, index.at(y));
  return FinitePoset::from_relations(labels_of(xs), rel);
}

Composition reversed(const Composition& a) {
  Composition r = a;
  std::reverse(r.parts.begin(), r.parts.end());
  return r;
}

// All compositions of n.
std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition{}};
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Composition c;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        c.parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.parts.push_back(run);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FinitePoset star_partitions(int n) {
  return from_cover_function(setpart::enumerate(n), setpart::star_covers);
}

FinitePoset refinement_partitions(int n) {
  const auto& xs = setpart::enumerate(n);
  return FinitePoset::from_predicate(
      labels_of(xs),
      [&](std::size_t i, std::size_t j) { return setpart::leq(xs[i], xs[j]); });
}

FinitePoset star_compositions(int n) {
  return from_cover_function(setcomp::enumerate(n), setcomp::star_covers);
}

FinitePoset refinement_compositions(int n) {
  const auto& xs = setcomp::enumerate(n);
  return FinitePoset::from_predicate(
      labels_of(xs),
      [&](std::size_t i, std::size_t j) { return setcomp::leq(xs[i], xs[j]); });
}

FinitePoset sharp_class(const Composition& alpha) {
  const auto xs = setcomp::with_alpha(alpha);
  return FinitePoset::from_predicate(
      labels_of(xs), [&](std::size_t i, std::size_t j) {
        return setcomp::sharp_leq(xs[i], xs[j]);
      });
}

FinitePoset sharp_compositions(int n) {
  const auto& xs = setcomp::enumerate(n);
  return FinitePoset::from_predicate(
      labels_of(xs), [&](std::size_t i, std::size_t j) {
        return setcomp::sharp_leq(xs[i], xs[j]);
      });
}

CheckResult reversal_complement_isomorphism(const Composition& alpha) {
  CheckResult r{"posets.sharp.reversal_complement", alpha.size()};
  const auto xs = setcomp::with_alpha(alpha);
  const auto ys = setcomp::with_alpha(reversed(alpha));
  std::vector<SetComposition> image;
  for (const auto& x : xs) image.push_back(setcomp::reverse_complement(x));
  std::vector<SetComposition> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ys) {
    r.ok = false;
    r.witness = alpha.str();
    r.detail = "map is not a bijection onto the reversed class";
    return r;
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (setcomp::sharp_leq(xs[i], xs[j]) !=
          setcomp::sharp_leq(image[i], image[j])) {
        r.ok = false;
        r.witness = xs[i].str() + ", " + xs[j].str();
        r.detail = "alpha " + alpha.str();
        return r;
      }
  return r;
}

Report verify_partition_orders(int max_n) {
  Report report;
  for (int n = 0; n <= max_n; ++n) {
    const auto& xs = setpart::enumerate(n);
    const FinitePoset p = star_partitions(n);
    const PosetStructure s = p.structure();

    CheckResult ranked{"posets.star_partitions.ranked", n};
    ranked.ok = s.ranked;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (s.rank[i] != n - xs[i].length() && ranked.ok) {
        ranked.ok = false;
        ranked.witness = xs[i].str();
      }
    CheckResult boolean{"posets.star_partitions.boolean_downsets", n,
                        s.boolean_downsets, s.boolean_witness};
    CheckResult euler{"posets.star_partitions.eulerian", n, s.eulerian,
                      s.eulerian_witness};
    CheckResult covered{"posets.star_partitions.covered_count", n};
    CheckResult phi{"posets.star_partitions.phi_set", n};
    CheckResult sub{"posets.star_partitions.refines", n};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const std::size_t expected = static_cast<std::size_t>(n - xs[i].length());
      if (p.lower_covers(i).size() != expected && covered.ok) {
        covered.ok = false;
        covered.witness = xs[i].str();
      }
      if (setpart::phi_set(xs[i]).size() != expected && phi.ok) {
        phi.ok = false;
        phi.witness = xs[i].str();
      }
      for (std::size_t j : p.upset(i))
        if (!setpart::leq(xs[i], xs[j]) && sub.ok) {
          sub.ok = false;
          sub.witness = xs[i].str() + ", " + xs[j].str();
        }
    }
    for (auto* c : {&ranked, &boolean, &euler, &covered, &phi, &sub})
      report.push_back(*c);

    if (n == 4) {
      CheckResult atomic{"posets.star_partitions.atomic_not_maximal", n};
      const SetPartition a = SetPartition::parse("{1,4|2|3}");
      atomic.ok = setpart::is_atomic(a) && !setpart::star_covers(a).empty();
      atomic.witness = a.str();
      report.push_back(atomic);
    }
  }
  return report;
}

Report verify_composition_orders(int max_n) {
  Report report;
  for (int n = 0; n <= max_n; ++n) {
    const auto& xs = setcomp::enumerate(n);
    const FinitePoset p = star_compositions(n);
    CheckResult comps{"posets.star_compositions.boolean_components", n};
    for (const auto& c : p.components())
      if (!p.is_boolean_lattice(c) && comps.ok) {
        comps.ok = false;
        comps.witness = xs[c.front()].str();
      }
    CheckResult isolated{"posets.star_compositions.decreasing_isolated", n};
    if (n > 0) {
      std::vector<Block> parts;
      for (int x = n; x >= 1; --x) parts.push_back({x});
      const std::string label = SetComposition::from_blocks(parts).str();
      const std::size_t i = *p.index_of(label);
      isolated.ok = p.upset(i).size() == 1 && p.downset(i).size() == 1;
      isolated.witness = label;
    }
    report.push_back(comps);
    report.push_back(isolated);

    CheckResult iso{"posets.sharp.reversal_complement", n};
    CheckResult partial{"posets.sharp.partial_order", n};
    for (const auto& alpha : compositions_of(n)) {
      const CheckResult r = reversal_complement_isomorphism(alpha);
      if (!r.ok && iso.ok) {
        iso.ok = false;
        iso.witness = r.witness;
        iso.detail = r.detail;
      }
      try {
        sharp_class(alpha);
      } catch (const PosetCycleError& e) {
        if (partial.ok) {
          partial.ok = false;
          partial.witness = e.what();
        }
      }
      // Transitivity, directly on the predicate.
      const auto cls = setcomp::with_alpha(alpha);
      for (const auto& a : cls)
        for (const auto& b : cls) {
          if (!setcomp::sharp_leq(a, b)) continue;
          for (const auto& c : cls)
            if (setcomp::sharp_leq(b, c) && !setcomp::sharp_leq(a, c) &&
                partial.ok) {
              partial.ok = false;
              partial.witness = a.str() + " <= " + b.str() + " <= " + c.str();
            }
        }
    }
    report.push_back(iso);
    report.push_back(partial);
  }
  return report;
}

}  // namespace posets
}  // namespace nchopf

#include "nchopf/realization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nchopf/ncqsym.hpp"
#include "nchopf/ncsym.hpp"

namespace nchopf {

void WordPolynomial::add_term(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Integer WordPolynomial::coefficient(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Integer(0) : it->second;
}

std::string WordPolynomial::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms) {
    std::string mono;
    for (int x : w) mono += "x" + std::to_string(x);
    if (mono.empty()) mono = "1";
    if (out.empty()) {
      if (c == -1) out += "-";
      else if (c != 1) out += c.str() + " ";
    } else {
      out += c < 0 ? " - " : " + ";
      const Integer a = abs(c);
      if (a != 1) out += a.str() + " ";
    }
    out += mono;
  }
  return out;
}

namespace realization {

namespace {

std::string word_str(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

// Calls f(values) for every injective map [k] -> [n].
void for_each_injection(int k, int n,
                        const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> values(k);
  std::vector<bool> used(n + 1, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      f(values);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      values[i] = v;
      rec(i + 1);
      used[v] = false;
    }
  };
  rec(0);
}

// Calls f(values) for every strictly increasing map [k] -> [n].
void for_each_increasing(int k, int n,
                         const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> values(k);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == k) {
      f(values);
      return;
    }
    for (int v = lo; v <= n - (k - i - 1); ++v) {
      values[i] = v;
      rec(i + 1, v + 1);
    }
  };
  rec(0, 1);
}

int max_degree(const WordPolynomial& p) {
  int d = 0;
  for (const auto& [w, c] : p.terms) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

template <class Index, class Pattern, class Realize>
Reexpansion<Index> reexpand(const WordPolynomial& p, Basis basis,
                            Pattern pattern, Realize realize_one) {
  Reexpansion<Index> r{Element<Index>(basis)};
  r.lossy = p.nVars < max_degree(p);
  std::map<Index, Word> representative;
  for (const auto& [w, c] : p.terms) representative.try_emplace(pattern(w), w);

  std::vector<std::pair<Index, Word>> order(representative.begin(),
                                            representative.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first.length() > b.first.length();
  });

  std::size_t accounted = 0;
  for (const auto& [idx, rep] : order) {
    const Integer c = p.coefficient(rep);
    const WordPolynomial full = realize_one(idx, p.nVars);
    for (const auto& [w, one] : full.terms) {
      if (p.coefficient(w) != c && r.exact) {
        r.exact = false;
        r.witness = word_str(w);
      }
    }
    accounted += full.terms.size();
    r.element.add_term(idx, c);
  }
  if (r.exact && accounted != p.terms.size()) {
    r.exact = false;
    r.witness = "unclassified words";
  }
  return r;
}

}  // namespace

WordPolynomial realize_m(const SetPartition& a, int nVars) {
  WordPolynomial p;
  p.nVars = nVars;
  if (nVars < a.length()) {
    p.degenerate = true;
    return p;
  }
  Word w(a.size());
  for_each_injection(a.length(), nVars, [&](const std::vector<int>& values) {
    for (int x = 1; x <= a.size(); ++x) w[x - 1] = values[a.block_of(x)];
    p.add_term(w, 1);
  });
  return p;
}

WordPolynomial realize_M(const SetComposition& phi, int nVars) {
  WordPolynomial p;
  p.nVars = nVars;
  if (nVars < phi.length()) {
    p.degenerate = true;
    return p;
  }
  Word w(phi.size());
  for_each_increasing(phi.length(), nVars, [&](const std::vector<int>& values) {
    for (int x = 1; x <= phi.size(); ++x) w[x - 1] = values[phi.part_of(x)];
    p.add_term(w, 1);
  });
  return p;
}

namespace {

template <class Index, class One>
WordPolynomial realize_element(const Element<Index>& x, int nVars,
                               Basis expected, One one) {
  if (x.basis() != expected)
    throw BasisMismatch("realization needs the " +
                        std::string(basis_name(expected)) + " basis");
  WordPolynomial out;
  out.nVars = nVars;
  for (const auto& [idx, c] : x.terms()) {
    const WordPolynomial p = one(idx, nVars);
    out.degenerate = out.degenerate || p.degenerate;
    for (const auto& [w, d] : p.terms) out.add_term(w, c * d);
  }
  return out;
}

}  // namespace

WordPolynomial realize(const Element<SetPartition>& x, int nVars) {
  return realize_element(x, nVars, Basis::m, realize_m);
}

WordPolynomial realize(const Element<SetComposition>& x, int nVars) {
  return realize_element(x, nVars, Basis::M, realize_M);
}

WordPolynomial word_mul(const WordPolynomial& p, const WordPolynomial& q) {
  if (p.nVars != q.nVars)
    throw SizeMismatch("word_mul: alphabets of size " +
                       std::to_string(p.nVars) + " and " +
                       std::to_string(q.nVars));
  WordPolynomial out;
  out.nVars = p.nVars;
  out.degenerate = p.degenerate || q.degenerate;
  for (const auto& [u, a] : p.terms)
    for (const auto& [v, b] : q.terms) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, a * b);
    }
  return out;
}

WordPolynomial permute_letters(const WordPolynomial& p,
                               const std::vector<int>& perm) {
  WordPolynomial out;
  out.nVars = p.nVars;
  out.degenerate = p.degenerate;
  for (const auto& [w, c] : p.terms) {
    Word image(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) image[i] = perm[w[i] - 1];
    out.add_term(image, c);
  }
  return out;
}

SetPartition letter_pattern(const Word& w) {
  std::vector<int> labels(w.begin(), w.end());
  return SetPartition::from_labels(labels);
}

SetComposition value_pattern(const Word& w) {
  std::vector<int> values(w.begin(), w.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> labels(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    labels[i] = static_cast<int>(
        std::lower_bound(values.begin(), values.end(), w[i]) - values.begin());
  return SetComposition::from_labels(labels);
}

Reexpansion<SetPartition> reexpand_m(const WordPolynomial& p) {
  return reexpand<SetPartition>(p, Basis::m, letter_pattern, realize_m);
}

Reexpansion<SetComposition> reexpand_M(const WordPolynomial& p) {
  return reexpand<SetComposition>(p, Basis::M, value_pattern, realize_M);
}

bool quasisym_check(const WordPolynomial& p) { return reexpand_M(p).exact; }
bool symmetric_check(const WordPolynomial& p) { return reexpand_m(p).exact; }

Report verify_oracle(int max_partition_grade, int max_composition_grade) {
  Report report;

  for (int n = 0; n <= max_partition_grade; ++n) {
    CheckResult product{"realization.m_product", n};
    CheckResult morphism{"realization.m_morphism", n};
    CheckResult trip{"realization.m_round_trip", n};
    for (int a = 0; a <= n; ++a)
      for (const auto& x : setpart::enumerate(a))
        for (const auto& y : setpart::enumerate(n - a)) {
          const WordPolynomial word =
              word_mul(realize_m(x, n), realize_m(y, n));
          const Reexpansion<SetPartition> back = reexpand_m(word);
          const ncsym::Elt formula = ncsym::m_mul(x, y);
          if (product.ok &&
              (!back.exact || back.lossy || !(back.element == formula))) {
            product.ok = false;
            product.witness = x.str() + " * " + y.str();
            product.detail = back.exact ? to_text(back.element)
                                        : "residual at " + back.witness;
          }
          if (morphism.ok && !(realize(formula, n) == word)) {
            morphism.ok = false;
            morphism.witness = x.str() + " * " + y.str();
          }
        }
    for (const auto& x : setpart::enumerate(n)) {
      const auto back = reexpand_m(realize_m(x, n));
      if (trip.ok && (!back.exact ||
                      !(back.element == ncsym::Elt(Basis::m, x)))) {
        trip.ok = false;
        trip.witness = x.str();
      }
    }
    report.push_back(product);
    report.push_back(morphism);
    report.push_back(trip);
  }

  for (int n = 0; n <= max_composition_grade; ++n) {
    CheckResult product{"realization.M_product", n};
    CheckResult trip{"realization.M_round_trip", n};
    CheckResult quasi{"realization.quasisymmetric", n};
    for (int a = 0; a <= n; ++a)
      for (const auto& x : setcomp::enumerate(a))
        for (const auto& y : setcomp::enumerate(n - a)) {
          const WordPolynomial word =
              word_mul(realize_M(x, n), realize_M(y, n));
          const Reexpansion<SetComposition> back = reexpand_M(word);
          if (product.ok && (!back.exact || back.lossy ||
                             !(back.element == ncqsym::M_mul(x, y)))) {
            product.ok = false;
            product.witness = x.str() + " * " + y.str();
            product.detail = back.exact ? to_text(back.element)
                                        : "residual at " + back.witness;
          }
        }
    for (const auto& x : setcomp::enumerate(n)) {
      const auto back = reexpand_M(realize_M(x, n));
      if (trip.ok && (!back.exact ||
                      !(back.element == ncqsym::Elt(Basis::M, x)))) {
        trip.ok = false;
        trip.witness = x.str();
      }
      for (int vars = 0; vars <= max_composition_grade; ++vars)
        if (quasi.ok && !quasisym_check(realize_M(x, vars))) {
          quasi.ok = false;
          quasi.witness = x.str() + " in " + std::to_string(vars);
        }
    }
    report.push_back(product);
    report.push_back(trip);
    report.push_back(quasi);
  }

  const int small = std::min(max_partition_grade, 4);
  for (int n = 0; n <= small; ++n) {
    CheckResult invariant{"realization.letter_permutation_invariance", n};
    CheckResult theta{"realization.theta_sum", n};
    std::vector<int> perm(n);
    for (const auto& a : setpart::enumerate(n)) {
      const WordPolynomial p = realize_m(a, n);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        if (invariant.ok && !(permute_letters(p, perm) == p)) {
          invariant.ok = false;
          invariant.witness = a.str();
        }
      } while (std::next_permutation(perm.begin(), perm.end()));

      for (int vars = 0; vars <= small; ++vars) {
        WordPolynomial sum;
        sum.nVars = vars;
        for (const auto& phi : setcomp::enumerate(n))
          if (setcomp::forget(phi) == a)
            for (const auto& [w, c] : realize_M(phi, vars).terms)
              sum.add_term(w, c);
        if (theta.ok && !(sum == realize_m(a, vars))) {
          theta.ok = false;
          theta.witness = a.str() + " in " + std::to_string(vars);
        }
      }
    }
    report.push_back(invariant);
    report.push_back(theta);
  }
  return report;
}

}  // namespace realization
}  // namespace nchopf

#include "nchopf/ncsym.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "nchopf/lyndon.hpp"
#include "subsets.hpp"

namespace nchopf::ncsym {

namespace {

SetPartition one_block(int n) {
  if (n == 0) return SetPartition{};
  Block b(n);
  std::iota(b.begin(), b.end(), 1);
  return SetPartition::from_blocks({b});
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> r;
  for (int x = lo; x <= hi; ++x) r.push_back(x);
  return r;
}

SetPartition concat_all(const std::vector<SetPartition>& parts) {
  SetPartition out;
  for (const auto& p : parts) out = setpart::concat(out, p);
  return out;
}

void require_side(Basis b, bool dual) {
  const bool is_dual = b == Basis::w || b == Basis::qdual;
  if (!is_partition_basis(b) || is_dual != dual)
    throw BasisMismatch(std::string("basis ") + std::string(basis_name(b)) +
                        " is not on the expected side");
}

bool is_dual_basis(Basis b) { return b == Basis::w || b == Basis::qdual; }

Elt to_base(const Elt& x) {
  switch (x.basis()) {
    case Basis::m:
    case Basis::w:
      return x;
    case Basis::p:
      return p_basis().to_base(x);
    case Basis::q:
      return q_basis().to_base(x);
    case Basis::qdual:
      return qdual_basis().to_base(x);
    default:
      throw BasisMismatch("not a set-partition basis");
  }
}

Elt from_base(const Elt& x, Basis to) {
  switch (to) {
    case Basis::m:
    case Basis::w:
      return x;
    case Basis::p:
      return p_basis().from_base(x);
    case Basis::q:
      return q_basis().from_base(x);
    case Basis::qdual:
      return qdual_basis().from_base(x);
    default:
      throw BasisMismatch("not a set-partition basis");
  }
}

Tens tensor_from_base(const Tens& t, Basis to) {
  if (to == Basis::m || to == Basis::w) return t;
  const BasisMap<SetPartition> f = [&](const SetPartition& i) {
    return from_base(Elt(t.bases()[0], i), to);
  };
  return tensor_map(t, {to, to}, f, f);
}

std::function<const std::vector<SetPartition>&(int)> by_grade() {
  return [](int n) -> const std::vector<SetPartition>& {
    return setpart::enumerate(n);
  };
}

std::vector<std::vector<SetPartition>> atomic_by_grade(int max_grade) {
  std::vector<std::vector<SetPartition>> out(max_grade + 1);
  for (int k = 1; k <= max_grade; ++k)
    for (const auto& a : setpart::enumerate(k))
      if (setpart::is_atomic(a)) out[k].push_back(a);
  return out;
}

// All words of atomic partitions with total size n.
void atomic_words(const std::vector<std::vector<SetPartition>>& atoms, int n,
                  std::vector<SetPartition>& prefix,
                  const std::function<void(const std::vector<SetPartition>&)>& f) {
  if (n == 0) {
    f(prefix);
    return;
  }
  for (int k = 1; k <= n; ++k)
    for (const auto& a : atoms[k]) {
      prefix.push_back(a);
      atomic_words(atoms, n - k, prefix, f);
      prefix.pop_back();
    }
}

// Multiset of shuffles of u and v.
std::map<std::vector<SetPartition>, int> shuffles(
    const std::vector<SetPartition>& u, const std::vector<SetPartition>& v) {
  std::map<std::vector<SetPartition>, int> out;
  const int n = static_cast<int>(u.size() + v.size());
  detail::for_each_k_subset(
      n, static_cast<int>(u.size()),
      [&](std::span<const int> s, std::span<const int>) {
        std::vector<SetPartition> word;
        std::size_t i = 0, j = 0, si = 0;
        for (int pos = 1; pos <= n; ++pos) {
          if (si < s.size() && s[si] == pos) {
            word.push_back(u[i++]);
            ++si;
          } else {
            word.push_back(v[j++]);
          }
        }
        ++out[word];
      });
  return out;
}

}  // namespace

Elt m_mul(const SetPartition& a, const SetPartition& b) {
  const int n = a.size();
  std::vector<Block> ablocks = a.blocks();
  std::vector<Block> bblocks = b.blocks();
  for (auto& blk : bblocks)
    for (int& x : blk) x += n;
  Elt out(Basis::m);
  std::vector<bool> used(bblocks.size(), false);
  std::vector<Block> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ablocks.size()) {
      std::vector<Block> blocks = current;
      for (std::size_t j = 0; j < bblocks.size(); ++j)
        if (!used[j]) blocks.push_back(bblocks[j]);
      out.add_term(SetPartition::from_blocks(std::move(blocks)), 1);
      return;
    }
    current.push_back(ablocks[i]);
    rec(i + 1);
    current.pop_back();
    for (std::size_t j = 0; j < bblocks.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      Block merged = ablocks[i];
      merged.insert(merged.end(), bblocks[j].begin(), bblocks[j].end());
      current.push_back(std::move(merged));
      rec(i + 1);
      current.pop_back();
      used[j] = false;
    }
  };
  rec(0);
  return out;
}

Elt m_mul_by_meet(const SetPartition& a, const SetPartition& b) {
  const SetPartition target = setpart::concat(a, b);
  const SetPartition split =
      setpart::concat(one_block(a.size()), one_block(b.size()));
  Elt out(Basis::m);
  for (const auto& c : setpart::enumerate(a.size() + b.size()))
    if (setpart::meet(c, split) == target) out.add_term(c, 1);
  return out;
}

Tens m_comul(const SetPartition& a) {
  const std::vector<Block> blocks = a.blocks();
  const std::size_t l = blocks.size();
  Tens out(Basis::m);
  for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
    std::vector<Block> in, rest;
    for (std::size_t i = 0; i < l; ++i)
      ((mask >> i) & 1 ? in : rest).push_back(blocks[i]);
    out.add_term({setpart::standardize(in), setpart::standardize(rest)}, 1);
  }
  return out;
}

Elt w_mul(const SetPartition& a, const SetPartition& b) {
  const int n = a.size();
  const int k = b.size();
  Elt out(Basis::w);
  detail::for_each_k_subset(
      n + k, n, [&](std::span<const int> s, std::span<const int> c) {
        std::vector<Block> blocks = setpart::raise(a, s);
        std::vector<Block> rest = setpart::raise(b, c);
        blocks.insert(blocks.end(), rest.begin(), rest.end());
        out.add_term(SetPartition::from_blocks(std::move(blocks)), 1);
      });
  return out;
}

Tens w_comul(const SetPartition& a) {
  const int n = a.size();
  Tens out(Basis::w);
  for (int i = 0; i <= n; ++i) {
    const std::vector<int> lo = range(1, i);
    const std::vector<int> hi = range(i + 1, n);
    out.add_term({setpart::standardize(setpart::restrict(a, lo)),
                  setpart::standardize(setpart::restrict(a, hi))},
                 1);
  }
  return out;
}

Tens w_comul_by_meet(const SetPartition& a) {
  const int n = a.size();
  Tens out(Basis::w);
  for (int k = 0; k <= n; ++k) {
    const SetPartition split =
        setpart::concat(one_block(k), one_block(n - k));
    const SetPartition mt = setpart::meet(split, a);
    std::vector<Block> left, right;
    for (const Block& blk : mt.blocks()) {
      if (blk.back() <= k) {
        left.push_back(blk);
      } else {
        Block shifted = blk;
        for (int& x : shifted) x -= k;
        right.push_back(std::move(shifted));
      }
    }
    const SetPartition b = SetPartition::from_blocks(left);
    const SetPartition c = SetPartition::from_blocks(right);
    if (setpart::concat(b, c) == mt) out.add_term({b, c}, 1);
  }
  return out;
}

Elt p_expand(const SetPartition& a) {
  const std::vector<Block> blocks = a.blocks();
  Elt out(Basis::m);
  for (const auto& coarse : setpart::enumerate(a.length())) {
    std::vector<Block> merged;
    for (const Block& group : coarse.blocks()) {
      Block u;
      for (int i : group) u.insert(u.end(), blocks[i - 1].begin(),
                                   blocks[i - 1].end());
      merged.push_back(std::move(u));
    }
    out.add_term(SetPartition::from_blocks(std::move(merged)), 1);
  }
  return out;
}

Elt q_expand(const SetPartition& a) {
  Elt out(Basis::m);
  for (const auto& b : setpart::star_upset(a)) out.add_term(b, 1);
  return out;
}

Elt qdual_expand(const SetPartition& a) {
  Elt out(Basis::w);
  for (const auto& b : setpart::star_downset(a))
    out.add_term(b, (b.length() - a.length()) % 2 == 0 ? 1 : -1);
  return out;
}

Elt p_mul(const SetPartition& a, const SetPartition& b) {
  return Elt(Basis::p, setpart::concat(a, b));
}

Elt q_mul(const SetPartition& a, const SetPartition& b) {
  return Elt(Basis::q, setpart::concat(a, b));
}

const HopfAlgebra<SetPartition>& m_algebra() {
  static const HopfAlgebra<SetPartition> h(Basis::m, m_mul, m_comul);
  return h;
}

const HopfAlgebra<SetPartition>& w_algebra() {
  static const HopfAlgebra<SetPartition> h(Basis::w, w_mul, w_comul);
  return h;
}

const TriangularBasis<SetPartition>& p_basis() {
  static const TriangularBasis<SetPartition> b(Basis::p, Basis::m, p_expand);
  return b;
}

const TriangularBasis<SetPartition>& q_basis() {
  static const TriangularBasis<SetPartition> b(Basis::q, Basis::m, q_expand);
  return b;
}

const TriangularBasis<SetPartition>& qdual_basis() {
  static const TriangularBasis<SetPartition> b(Basis::qdual, Basis::w,
                                               qdual_expand);
  return b;
}

Elt convert(const Elt& x, Basis to) {
  const bool dual = is_dual_basis(x.basis());
  require_side(x.basis(), dual);
  require_side(to, dual);
  if (x.basis() == to) return x;
  return from_base(to_base(x), to);
}

Elt mul(const Elt& x, const Elt& y) {
  if (x.basis() != y.basis())
    throw BasisMismatch("operands of a product must share a basis");
  switch (x.basis()) {
    case Basis::m:
      return m_algebra().mul(x, y);
    case Basis::w:
      return w_algebra().mul(x, y);
    case Basis::p:
      return bilinear_extend<SetPartition>(x, y, Basis::p, p_mul);
    case Basis::q:
      return bilinear_extend<SetPartition>(x, y, Basis::q, q_mul);
    case Basis::qdual:
      return convert(w_algebra().mul(to_base(x), to_base(y)), Basis::qdual);
    default:
      throw BasisMismatch("not a set-partition basis");
  }
}

Tens comul(const Elt& x) {
  const Elt base = to_base(x);
  const auto& h = is_dual_basis(x.basis()) ? w_algebra() : m_algebra();
  return tensor_from_base(h.comul(base), x.basis());
}

Elt antipode(const Elt& x) {
  if (!x.is_zero() && !x.grade())
    throw std::invalid_argument("antipode expects a homogeneous element");
  const Elt base = to_base(x);
  const auto& h = is_dual_basis(x.basis()) ? w_algebra() : m_algebra();
  return from_base(h.antipode(base), x.basis());
}

Integer pair(const Elt& x, const Elt& y) {
  if (is_dual_basis(x.basis()) || !is_dual_basis(y.basis()) ||
      !is_partition_basis(x.basis()) || !is_partition_basis(y.basis()))
    throw BasisMismatch("pairing expects an algebra element and a dual one");
  return pairing(convert(x, Basis::m), convert(y, Basis::w));
}

std::vector<SetPartition> lyndon_generators(int n) {
  std::vector<SetPartition> out;
  for (const auto& a : setpart::enumerate(n))
    if (setpart::is_lyndon(a)) out.push_back(a);
  return out;
}

Report verify_hopf(int max_grade) {
  Report r = verify_hopf_axioms(m_algebra(), "ncsym.m", by_grade(), max_grade);
  append(r, verify_hopf_axioms(w_algebra(), "ncsym.w", by_grade(), max_grade));
  return r;
}

Report verify_duality(int max_grade) {
  Report report;
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult prod{"ncsym.duality.product", g};
    CheckResult coprod{"ncsym.duality.coproduct", g};
    for (int ga = 0; ga <= g; ++ga)
      for (const auto& a : setpart::enumerate(ga))
        for (const auto& b : setpart::enumerate(g - ga)) {
          const Elt wab = w_mul(a, b);
          const Elt mab = m_mul(a, b);
          for (const auto& c : setpart::enumerate(g)) {
            if (prod.ok && wab.coefficient(c) != m_comul(c).coefficient({a, b})) {
              prod.ok = false;
              prod.witness = c.str() + "; " + a.str() + ", " + b.str();
            }
            if (coprod.ok &&
                mab.coefficient(c) != w_comul(c).coefficient({a, b})) {
              coprod.ok = false;
              coprod.witness = c.str() + "; " + a.str() + ", " + b.str();
            }
          }
        }
    report.push_back(prod);
    report.push_back(coprod);
  }
  return report;
}

Report verify_multiplicative(int max_grade) {
  const auto& h = m_algebra();
  Report report;
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult p{"ncsym.p_product", g};
    CheckResult q{"ncsym.q_product", g};
    CheckResult qa{"ncsym.q_atomic_factors", g};
    for (int ga = 0; ga <= g; ++ga)
      for (const auto& a : setpart::enumerate(ga))
        for (const auto& b : setpart::enumerate(g - ga)) {
          const SetPartition ab = setpart::concat(a, b);
          if (p.ok && h.mul(p_expand(a), p_expand(b)) != p_expand(ab)) {
            p.ok = false;
            p.witness = a.str() + ", " + b.str();
          }
          if (q.ok && h.mul(q_expand(a), q_expand(b)) != q_expand(ab)) {
            q.ok = false;
            q.witness = a.str() + ", " + b.str();
          }
        }
    for (const auto& a : setpart::enumerate(g)) {
      Elt prod = h.unit();
      for (const auto& f : setpart::atomic_split(a))
        prod = h.mul(prod, q_expand(f));
      if (prod != q_expand(a) && qa.ok) {
        qa.ok = false;
        qa.witness = a.str();
      }
    }
    report.push_back(p);
    report.push_back(q);
    report.push_back(qa);
  }
  return report;
}

Report verify_free(int max_grade) {
  Report report;
  const auto atoms = atomic_by_grade(max_grade);
  // Number of words in atomic letters, from the series 1/(1 - sum a_k q^k).
  std::vector<Integer> words(max_grade + 1, 0);
  words[0] = 1;
  for (int n = 1; n <= max_grade; ++n)
    for (int k = 1; k <= n; ++k)
      words[n] += Integer(atoms[k].size()) * words[n - k];

  for (int n = 0; n <= max_grade; ++n) {
    const auto& all = setpart::enumerate(n);
    CheckResult count{"ncsym.free.monomial_count", n};
    if (words[n] != Integer(all.size())) {
      count.ok = false;
      count.detail = "monomials " + words[n].str() + " vs partitions " +
                     std::to_string(all.size());
    }

    // p_{A1}...p_{Ak} = p_{A1|...|Ak} and q likewise, so each monomial is a
    // single basis vector; the map from words to partitions must be onto
    // and one-to-one.
    CheckResult bij{"ncsym.free.monomial_bijection", n};
    std::map<SetPartition, int> hits;
    std::vector<SetPartition> prefix;
    atomic_words(atoms, n, prefix, [&](const std::vector<SetPartition>& w) {
      Elt pm(Basis::p, SetPartition{});
      Elt qm(Basis::q, SetPartition{});
      for (const auto& f : w) {
        pm = mul(pm, Elt(Basis::p, f));
        qm = mul(qm, Elt(Basis::q, f));
      }
      const SetPartition c = concat_all(w);
      if (pm != Elt(Basis::p, c) || qm != Elt(Basis::q, c)) {
        bij.ok = false;
        bij.witness = c.str();
      }
      ++hits[c];
    });
    for (const auto& a : all)
      if (hits[a] != 1 && bij.ok) {
        bij.ok = false;
        bij.witness = a.str();
        bij.detail = "hit " + std::to_string(hits[a]) + " times";
      }

    CheckResult tri{"ncsym.free.p_unitriangular", n};
    for (const auto& a : all) {
      const Elt pa = p_expand(a);
      for (const auto& [b, c] : pa.terms()) {
        const bool ok = c == 1 && setpart::leq(a, b);
        if (!ok && tri.ok) {
          tri.ok = false;
          tri.witness = a.str() + " -> " + b.str();
        }
      }
      if (pa.coefficient(a) != 1) tri.ok = false;
    }
    report.push_back(count);
    report.push_back(bij);
    report.push_back(tri);
  }
  return report;
}

Report verify_cofree(int max_grade) {
  Report report;
  auto cmp = [](const SetPartition& x, const SetPartition& y) {
    return setpart::cmp_atoms(x, y);
  };
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult tri{"ncsym.cofree.shuffle_triangularity", g};
    for (int ga = 1; ga < g; ++ga)
      for (const auto& a : setpart::enumerate(ga))
        for (const auto& b : setpart::enumerate(g - ga)) {
          const auto as = setpart::atomic_split(a);
          const auto bs = setpart::atomic_split(b);
          const std::size_t top = as.size() + bs.size();
          std::map<SetPartition, int> expected;
          for (const auto& [word, mult] : shuffles(as, bs))
            expected[concat_all(word)] += mult;
          const Elt prod = w_mul(a, b);
          for (const auto& [c, coeff] : prod.terms()) {
            const std::size_t len = setpart::atomic_split(c).size();
            const bool ok = len < top || (len == top && coeff == expected[c]);
            if (!ok && tri.ok) {
              tri.ok = false;
              tri.witness = a.str() + ", " + b.str() + " -> " + c.str();
            }
          }
          for (const auto& [c, mult] : expected)
            if (prod.coefficient(c) != mult && tri.ok) {
              tri.ok = false;
              tri.witness = a.str() + ", " + b.str() + " missing " + c.str();
            }
        }

    CheckResult rank{"ncsym.cofree.lyndon_rank", g};
    const auto& all = setpart::enumerate(g);
    std::vector<std::vector<Integer>> rows;
    for (const auto& c : all) {
      const auto letters = setpart::atomic_split(c);
      Elt prod = w_algebra().unit();
      for (const auto& factor : lyndon_factorize<SetPartition>(letters, cmp)) {
        const SetPartition gen = concat_all(factor);
        if (!setpart::is_lyndon(gen) && rank.ok) {
          rank.ok = false;
          rank.witness = gen.str();
        }
        prod = w_algebra().mul(prod, Elt(Basis::w, gen));
      }
      std::vector<Integer> row;
      row.reserve(all.size());
      for (const auto& d : all) row.push_back(prod.coefficient(d));
      rows.push_back(std::move(row));
    }
    const int r = exact_rank(std::move(rows));
    if (r != static_cast<int>(all.size())) rank.ok = false;
    rank.detail = "rank " + std::to_string(r) + " of " +
                  std::to_string(all.size());
    report.push_back(tri);
    report.push_back(rank);
  }
  return report;
}

Report verify_dual_coproduct_forms(int max_grade) {
  Report report;
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult r{"ncsym.dual_coproduct_forms", g};
    for (const auto& a : setpart::enumerate(g))
      if (w_comul(a) != w_comul_by_meet(a) && r.ok) {
        r.ok = false;
        r.witness = a.str();
      }
    report.push_back(r);
  }
  return report;
}

Report verify_zeta_factorization(int max_grade) {
  Report report;
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult entries{"ncsym.zeta.p_in_q_zero_one", g};
    CheckResult tri{"ncsym.zeta.p_in_q_unitriangular", g};
    CheckResult prod{"ncsym.zeta.product", g};
    const auto& all = setpart::enumerate(g);
    for (const auto& a : all) {
      const Elt in_q = convert(Elt(Basis::p, a), Basis::q);
      for (const auto& [b, c] : in_q.terms()) {
        if (c != 1 && entries.ok) {
          entries.ok = false;
          entries.witness = a.str() + " -> " + b.str();
          entries.detail = "coefficient " + c.str();
        }
        if (!setpart::leq(a, b) && tri.ok) {
          tri.ok = false;
          tri.witness = a.str() + " -> " + b.str();
        }
      }
      if (in_q.coefficient(a) != 1 && tri.ok) {
        tri.ok = false;
        tri.witness = a.str();
      }
      // Row a of (p in q)(q in m), compared with the zeta row of a.
      Elt row(Basis::m);
      for (const auto& [b, c] : in_q.terms()) row += c * q_expand(b);
      for (const auto& d : all) {
        const Integer zeta = setpart::leq(a, d) ? 1 : 0;
        if (row.coefficient(d) != zeta && prod.ok) {
          prod.ok = false;
          prod.witness = a.str() + ", " + d.str();
        }
      }
    }
    report.push_back(entries);
    report.push_back(tri);
    report.push_back(prod);
  }
  return report;
}

Report verify_qdual(int max_grade) {
  Report report;
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult r{"ncsym.qdual_pairing", g};
    const auto& all = setpart::enumerate(g);
    for (const auto& a : all)
      for (const auto& b : all) {
        const Integer v = pairing(q_expand(a), qdual_expand(b));
        if (v != (a == b ? 1 : 0) && r.ok) {
          r.ok = false;
          r.witness = a.str() + ", " + b.str();
        }
      }
    report.push_back(r);
  }
  return report;
}

}  // namespace nchopf::ncsym

#include "nchopf/ncqsym.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "subsets.hpp"

namespace nchopf::ncqsym {

namespace {

SetComposition one_part(int n) {
  if (n == 0) return SetComposition{};
  Block b(n);
  std::iota(b.begin(), b.end(), 1);
  return SetComposition::from_blocks({b});
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> r;
  for (int x = lo; x <= hi; ++x) r.push_back(x);
  return r;
}

bool is_dual_basis(Basis b) {
  return b == Basis::W || b == Basis::V || b == Basis::Qdual;
}

void require_composition_basis(Basis b) {
  if (is_partition_basis(b))
    throw BasisMismatch(std::string("basis ") + std::string(basis_name(b)) +
                        " is indexed by set partitions");
}

Elt to_base(const Elt& x) {
  switch (x.basis()) {
    case Basis::M:
    case Basis::W:
      return x;
    case Basis::Q:
      return Q_basis().to_base(x);
    case Basis::V:
      return V_basis().to_base(x);
    case Basis::Qdual:
      return Qdual_basis().to_base(x);
    default:
      throw BasisMismatch("not a set-composition basis");
  }
}

Elt from_base(const Elt& x, Basis to) {
  switch (to) {
    case Basis::M:
    case Basis::W:
      return x;
    case Basis::Q:
      return Q_basis().from_base(x);
    case Basis::V:
      return V_basis().from_base(x);
    case Basis::Qdual:
      return Qdual_basis().from_base(x);
    default:
      throw BasisMismatch("not a set-composition basis");
  }
}

Tens tensor_from_base(const Tens& t, Basis to) {
  if (to == Basis::M || to == Basis::W) return t;
  const BasisMap<SetComposition> f = [&](const SetComposition& i) {
    return from_base(Elt(t.bases()[0], i), to);
  };
  return tensor_map(t, {to, to}, f, f);
}

std::function<const std::vector<SetComposition>&(int)> by_grade() {
  return [](int n) -> const std::vector<SetComposition>& {
    return setcomp::enumerate(n);
  };
}

std::string pair_str(const SetComposition& a, const SetComposition& b) {
  return a.str() + ", " + b.str();
}

}  // namespace

Elt M_mul(const SetComposition& phi, const SetComposition& psi) {
  const int n = phi.size();
  const std::vector<Block> a = phi.blocks();
  std::vector<Block> b = psi.blocks();
  for (auto& blk : b)
    for (int& x : blk) x += n;
  Elt out(Basis::M);
  std::vector<Block> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t j) {
    if (i == a.size() && j == b.size()) {
      out.add_term(SetComposition::from_blocks(current), 1);
      return;
    }
    if (i < a.size()) {
      current.push_back(a[i]);
      rec(i + 1, j);
      current.pop_back();
    }
    if (j < b.size()) {
      current.push_back(b[j]);
      rec(i, j + 1);
      current.pop_back();
    }
    if (i < a.size() && j < b.size()) {
      Block fused = a[i];
      fused.insert(fused.end(), b[j].begin(), b[j].end());
      current.push_back(std::move(fused));
      rec(i + 1, j + 1);
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

Elt M_mul_by_wedge(const SetComposition& phi, const SetComposition& psi) {
  const SetComposition target = setcomp::concat(phi, psi);
  const SetComposition split =
      setcomp::concat(one_part(phi.size()), one_part(psi.size()));
  Elt out(Basis::M);
  for (const auto& g : setcomp::enumerate(phi.size() + psi.size()))
    if (setcomp::wedge(split, g) == target) out.add_term(g, 1);
  return out;
}

Tens M_comul(const SetComposition& phi) {
  const std::vector<Block> parts = phi.blocks();
  Tens out(Basis::M);
  for (std::size_t i = 0; i <= parts.size(); ++i) {
    const std::vector<Block> head(parts.begin(), parts.begin() + i);
    const std::vector<Block> tail(parts.begin() + i, parts.end());
    out.add_term({setcomp::standardize(head), setcomp::standardize(tail)}, 1);
  }
  return out;
}

Elt W_mul(const SetComposition& phi, const SetComposition& psi) {
  const int n = phi.size();
  const int k = psi.size();
  Elt out(Basis::W);
  detail::for_each_k_subset(
      n + k, n, [&](std::span<const int> s, std::span<const int> c) {
        std::vector<Block> parts = setcomp::raise(phi, s);
        std::vector<Block> rest = setcomp::raise(psi, c);
        parts.insert(parts.end(), rest.begin(), rest.end());
        out.add_term(SetComposition::from_blocks(std::move(parts)), 1);
      });
  return out;
}

Tens W_comul(const SetComposition& phi) {
  const int n = phi.size();
  Tens out(Basis::W);
  for (int k = 0; k <= n; ++k) {
    const std::vector<int> lo = range(1, k);
    const std::vector<int> hi = range(k + 1, n);
    out.add_term({setcomp::standardize(setcomp::restrict(phi, lo)),
                  setcomp::standardize(setcomp::restrict(phi, hi))},
                 1);
  }
  return out;
}

Tens W_comul_by_wedge(const SetComposition& phi) {
  const int n = phi.size();
  Tens out(Basis::W);
  for (int k = 0; k <= n; ++k) {
    const SetComposition split =
        setcomp::concat(one_part(k), one_part(n - k));
    const SetComposition wd = setcomp::wedge(split, phi);
    std::vector<Block> left, right;
    for (const Block& blk : wd.blocks()) {
      if (blk.back() <= k) {
        left.push_back(blk);
      } else {
        Block shifted = blk;
        for (int& x : shifted) x -= k;
        right.push_back(std::move(shifted));
      }
    }
    const SetComposition psi = SetComposition::from_blocks(left);
    const SetComposition gamma = SetComposition::from_blocks(right);
    if (setcomp::concat(psi, gamma) == wd) out.add_term({psi, gamma}, 1);
  }
  return out;
}

Elt Q_expand(const SetComposition& phi) {
  Elt out(Basis::M);
  for (const auto& g : setcomp::star_upset(phi)) out.add_term(g, 1);
  return out;
}

Elt Q_mul(const SetComposition& phi, const SetComposition& psi) {
  Elt out(Basis::Q);
  for (const auto& g : setcomp::shifted_shuffle(phi, psi)) out.add_term(g, 1);
  return out;
}

Elt V_expand(const SetComposition& phi) {
  Elt out(Basis::W);
  for (const auto& g : setcomp::sharp_upset(phi)) out.add_term(g, 1);
  return out;
}

Elt V_mul(const SetComposition& phi, const SetComposition& psi) {
  return Elt(Basis::V, setcomp::concat(phi, psi));
}

Elt Qdual_expand(const SetComposition& phi) {
  Elt out(Basis::W);
  for (const auto& g : setcomp::star_downset(phi))
    out.add_term(g, (g.length() - phi.length()) % 2 == 0 ? 1 : -1);
  return out;
}

Elt theta(const ncsym::Elt& x) {
  if (x.basis() != Basis::m)
    throw BasisMismatch("theta expects an m element");
  Elt out(Basis::M);
  for (const auto& [a, c] : x.terms()) {
    std::vector<Block> blocks = a.blocks();
    std::sort(blocks.begin(), blocks.end());
    do {
      out.add_term(SetComposition::from_blocks(blocks), c);
    } while (std::next_permutation(blocks.begin(), blocks.end()));
  }
  return out;
}

ncsym::Elt theta_star(const Elt& x) {
  if (x.basis() != Basis::W)
    throw BasisMismatch("theta* expects a W element");
  ncsym::Elt out(Basis::w);
  for (const auto& [phi, c] : x.terms())
    out.add_term(setcomp::forget(phi), c);
  return out;
}

const HopfAlgebra<SetComposition>& M_algebra() {
  static const HopfAlgebra<SetComposition> h(Basis::M, M_mul, M_comul);
  return h;
}

const HopfAlgebra<SetComposition>& W_algebra() {
  static const HopfAlgebra<SetComposition> h(Basis::W, W_mul, W_comul);
  return h;
}

const TriangularBasis<SetComposition>& Q_basis() {
  static const TriangularBasis<SetComposition> b(Basis::Q, Basis::M,
                                                 Q_expand);
  return b;
}

const TriangularBasis<SetComposition>& V_basis() {
  static const TriangularBasis<SetComposition> b(Basis::V, Basis::W,
                                                 V_expand);
  return b;
}

const TriangularBasis<SetComposition>& Qdual_basis() {
  static const TriangularBasis<SetComposition> b(Basis::Qdual, Basis::W,
                                                 Qdual_expand);
  return b;
}

Elt convert(const Elt& x, Basis to) {
  require_composition_basis(x.basis());
  require_composition_basis(to);
  if (is_dual_basis(x.basis()) != is_dual_basis(to))
    throw BasisMismatch(std::string("cannot convert ") +
                        std::string(basis_name(x.basis())) + " to " +
                        std::string(basis_name(to)));
  if (x.basis() == to) return x;
  return from_base(to_base(x), to);
}

Elt mul(const Elt& x, const Elt& y) {
  if (x.basis() != y.basis())
    throw BasisMismatch("operands of a product must share a basis");
  switch (x.basis()) {
    case Basis::M:
      return M_algebra().mul(x, y);
    case Basis::W:
      return W_algebra().mul(x, y);
    case Basis::Q:
      return bilinear_extend<SetComposition>(x, y, Basis::Q, Q_mul);
    case Basis::V:
      return bilinear_extend<SetComposition>(x, y, Basis::V, V_mul);
    case Basis::Qdual:
      return convert(W_algebra().mul(to_base(x), to_base(y)), Basis::Qdual);
    default:
      throw BasisMismatch("not a set-composition basis");
  }
}

Tens comul(const Elt& x) {
  const Elt base = to_base(x);
  const auto& h = is_dual_basis(x.basis()) ? W_algebra() : M_algebra();
  return tensor_from_base(h.comul(base), x.basis());
}

Elt antipode(const Elt& x) {
  if (!x.is_zero() && !x.grade())
    throw std::invalid_argument("antipode expects a homogeneous element");
  const Elt base = to_base(x);
  const auto& h = is_dual_basis(x.basis()) ? W_algebra() : M_algebra();
  return from_base(h.antipode(base), x.basis());
}

Integer pair(const Elt& x, const Elt& y) {
  require_composition_basis(x.basis());
  require_composition_basis(y.basis());
  if (is_dual_basis(x.basis()) || !is_dual_basis(y.basis()))
    throw BasisMismatch("pairing expects an algebra element and a dual one");
  return pairing(convert(x, Basis::M), convert(y, Basis::W));
}

Report verify_hopf(int max_grade) {
  Report r =
      verify_hopf_axioms(M_algebra(), "ncqsym.M", by_grade(), max_grade);
  append(r,
         verify_hopf_axioms(W_algebra(), "ncqsym.W", by_grade(), max_grade));
  return r;
}

Report verify_duality(int max_grade) {
  Report report;
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult prod{"ncqsym.duality.product", g};
    CheckResult coprod{"ncqsym.duality.coproduct", g};
    for (int ga = 0; ga <= g; ++ga)
      for (const auto& a : setcomp::enumerate(ga))
        for (const auto& b : setcomp::enumerate(g - ga)) {
          const Elt wab = W_mul(a, b);
          const Elt mab = M_mul(a, b);
          for (const auto& c : setcomp::enumerate(g)) {
            if (prod.ok &&
                wab.coefficient(c) != M_comul(c).coefficient({a, b})) {
              prod.ok = false;
              prod.witness = c.str() + "; " + pair_str(a, b);
            }
            if (coprod.ok &&
                mab.coefficient(c) != W_comul(c).coefficient({a, b})) {
              coprod.ok = false;
              coprod.witness = c.str() + "; " + pair_str(a, b);
            }
          }
        }
    report.push_back(prod);
    report.push_back(coprod);
  }
  return report;
}

Report verify_multiplicative(int max_grade) {
  Report report;
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult q{"ncqsym.Q_shuffle_product", g};
    CheckResult v{"ncqsym.V_concat_product", g};
    for (int ga = 0; ga <= g; ++ga)
      for (const auto& a : setcomp::enumerate(ga))
        for (const auto& b : setcomp::enumerate(g - ga)) {
          const Elt lhs_q = M_algebra().mul(Q_expand(a), Q_expand(b));
          if (q.ok && lhs_q != Q_basis().to_base(Q_mul(a, b))) {
            q.ok = false;
            q.witness = pair_str(a, b);
          }
          const Elt lhs_v = W_algebra().mul(V_expand(a), V_expand(b));
          if (v.ok && lhs_v != V_expand(setcomp::concat(a, b))) {
            v.ok = false;
            v.witness = pair_str(a, b);
          }
        }
    report.push_back(q);
    report.push_back(v);
  }
  return report;
}

Report verify_free_cofree(int max_grade) {
  Report report;
  std::vector<Integer> atomic(max_grade + 1, 0);
  for (int k = 1; k <= max_grade; ++k)
    for (const auto& phi : setcomp::enumerate(k))
      if (setcomp::is_atomic(phi)) atomic[k] += 1;
  std::vector<Integer> monomials(max_grade + 1, 0);
  monomials[0] = 1;
  for (int n = 1; n <= max_grade; ++n)
    for (int k = 1; k <= n; ++k) monomials[n] += atomic[k] * monomials[n - k];

  for (int g = 0; g <= max_grade; ++g) {
    const auto& all = setcomp::enumerate(g);
    CheckResult tri{"ncqsym.free.Q_triangularity", g};
    for (const auto& phi : all) {
      Elt prod(Basis::Q, SetComposition{});
      for (const auto& f : setcomp::atomic_split(phi))
        prod = mul(prod, Elt(Basis::Q, f));
      bool ok = prod.coefficient(phi) == 1;
      for (const auto& [gamma, c] : prod.terms())
        if (gamma != phi &&
            setcomp::word_lex_cmp(phi, gamma) != std::strong_ordering::less)
          ok = false;
      if (!ok && tri.ok) {
        tri.ok = false;
        tri.witness = phi.str();
      }
    }

    CheckResult count{"ncqsym.cofree.V_monomial_count", g};
    // Each atomic V-monomial is the single vector V of the concatenation,
    // and concatenation of atomic factors is the atomic split read back.
    std::map<SetComposition, int> hits;
    for (const auto& phi : all) {
      Elt prod(Basis::V, SetComposition{});
      for (const auto& f : setcomp::atomic_split(phi))
        prod = mul(prod, Elt(Basis::V, f));
      if (prod.size() == 1) ++hits[prod.terms().begin()->first];
    }
    const bool bijective =
        hits.size() == all.size() &&
        std::all_of(hits.begin(), hits.end(),
                    [](const auto& kv) { return kv.second == 1; });
    if (monomials[g] != Integer(all.size()) || !bijective) {
      count.ok = false;
      count.detail = "monomials " + monomials[g].str() + " vs compositions " +
                     std::to_string(all.size());
    }

    CheckResult alpha{"ncqsym.cofree.W_alpha_conservation", g};
    for (int ga = 0; ga <= g; ++ga)
      for (const auto& a : setcomp::enumerate(ga))
        for (const auto& b : setcomp::enumerate(g - ga)) {
          Composition expected = setcomp::alpha(a);
          const auto tail = setcomp::alpha(b).parts;
          expected.parts.insert(expected.parts.end(), tail.begin(), tail.end());
          const Elt prod = W_mul(a, b);
          for (const auto& [c, coeff] : prod.terms())
            if (setcomp::alpha(c) != expected && alpha.ok) {
              alpha.ok = false;
              alpha.witness = pair_str(a, b) + " -> " + c.str();
            }
        }
    report.push_back(tri);
    report.push_back(count);
    report.push_back(alpha);
  }
  return report;
}

Report verify_theta(int max_grade) {
  Report report;
  const auto& m = ncsym::m_algebra();
  const auto& M = M_algebra();
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult alg{"ncqsym.theta.algebra_map", g};
    CheckResult coalg{"ncqsym.theta.coalgebra_map", g};
    CheckResult dual{"ncqsym.theta_star.intertwines", g};
    CheckResult forms{"ncqsym.dual_coproduct_forms", g};
    for (int ga = 0; ga <= g; ++ga)
      for (const auto& a : setpart::enumerate(ga))
        for (const auto& b : setpart::enumerate(g - ga)) {
          const ncsym::Elt ea(Basis::m, a), eb(Basis::m, b);
          if (alg.ok && theta(m.mul(ea, eb)) != M.mul(theta(ea), theta(eb))) {
            alg.ok = false;
            alg.witness = a.str() + ", " + b.str();
          }
        }
    for (const auto& a : setpart::enumerate(g)) {
      const ncsym::Elt ea(Basis::m, a);
      Tens lhs(Basis::M);
      for (const auto& [k, c] : m.coproduct(a).terms())
        lhs += c * tensor(theta(ncsym::Elt(Basis::m, k[0])),
                          theta(ncsym::Elt(Basis::m, k[1])));
      if (lhs != M.comul(theta(ea)) && coalg.ok) {
        coalg.ok = false;
        coalg.witness = a.str();
      }
    }
    for (const auto& phi : setcomp::enumerate(g)) {
      ncsym::Tens lhs(Basis::w);
      const Tens cop = W_comul(phi);
      for (const auto& [k, c] : cop.terms())
        lhs.add_term({setcomp::forget(k[0]), setcomp::forget(k[1])}, c);
      const ncsym::Tens rhs = ncsym::w_comul(setcomp::forget(phi));
      if (lhs != rhs && dual.ok) {
        dual.ok = false;
        dual.witness = phi.str();
      }
      if (W_comul(phi) != W_comul_by_wedge(phi) && forms.ok) {
        forms.ok = false;
        forms.witness = phi.str();
      }
    }
    report.push_back(alg);
    report.push_back(coalg);
    report.push_back(dual);
    report.push_back(forms);
  }
  return report;
}

Report verify_qdual(int max_grade) {
  Report report;
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult r{"ncqsym.Qdual_pairing", g};
    const auto& all = setcomp::enumerate(g);
    for (const auto& a : all)
      for (const auto& b : all) {
        const Integer v = pairing(Q_expand(a), Qdual_expand(b));
        if (v != (a == b ? 1 : 0) && r.ok) {
          r.ok = false;
          r.witness = pair_str(a, b);
        }
      }
    report.push_back(r);
  }
  return report;
}

}  // namespace nchopf::ncqsym

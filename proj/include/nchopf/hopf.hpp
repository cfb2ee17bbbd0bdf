#ifndef NCHOPF_HOPF_HPP_
#define NCHOPF_HOPF_HPP_

// Graded connected Hopf algebras given by a product and coproduct on a basis,
// with memoized structure constants, the antipode recursion, triangular
// changes of basis and the axiom checks.

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nchopf/linalg.hpp"
#include "nchopf/report.hpp"

namespace nchopf {

template <class Index>
using BasisCoproduct = std::function<Tensor<Index>(const Index&)>;

// Write-once memo table safe for concurrent readers and writers. Values are
// computed outside the lock; references stay valid because std::map nodes
// never move.
template <class Key, class Value>
class Memo {
 public:
  template <class F>
  const Value& get(const Key& key, F&& compute) const {
    {
      std::lock_guard lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  mutable std::mutex mutex_;
  mutable std::map<Key, Value> table_;
};

template <class Index>
class HopfAlgebra {
 public:
  HopfAlgebra(Basis basis, BasisProduct<Index> product,
              BasisCoproduct<Index> coproduct)
      : basis_(basis),
        product_(std::move(product)),
        coproduct_(std::move(coproduct)) {}

  Basis basis() const { return basis_; }

  const Element<Index>& product(const Index& a, const Index& b) const {
    return products_.get({a, b}, [&] { return product_(a, b); });
  }

  const Tensor<Index>& coproduct(const Index& a) const {
    return coproducts_.get(a, [&] { return coproduct_(a); });
  }

  // S(1) = 1 and S(b) = -sum S(b') b'' over the terms of Delta(b) whose left
  // factor has lower grade.
  const Element<Index>& antipode(const Index& b) const {
    return antipodes_.get(b, [&] {
      Element<Index> out(basis_);
      if (b.size() == 0) {
        out.add_term(b, 1);
        return out;
      }
      for (const auto& [k, c] : coproduct(b).terms()) {
        if (k[0].size() == b.size()) {
          if (k[0] != b || c != 1)
            throw std::logic_error("coproduct of " + b.str() +
                                   " is not connected-graded");
          continue;
        }
        out -= c * mul(antipode(k[0]), Element<Index>(basis_, k[1]));
      }
      return out;
    });
  }

  Element<Index> mul(const Element<Index>& x, const Element<Index>& y) const {
    check(x);
    check(y);
    Element<Index> out(basis_);
    for (const auto& [a, ca] : x.terms())
      for (const auto& [b, cb] : y.terms()) out += (ca * cb) * product(a, b);
    return out;
  }

  Tensor<Index> comul(const Element<Index>& x) const {
    check(x);
    Tensor<Index> out(basis_);
    for (const auto& [a, c] : x.terms()) out += c * coproduct(a);
    return out;
  }

  Element<Index> antipode(const Element<Index>& x) const {
    check(x);
    if (!x.is_zero() && !x.grade())
      throw std::invalid_argument("antipode expects a homogeneous element");
    Element<Index> out(basis_);
    for (const auto& [a, c] : x.terms()) out += c * antipode(a);
    return out;
  }

  // Coefficient of the unit.
  Integer counit(const Element<Index>& x) const {
    check(x);
    return x.coefficient(Index{});
  }

  Element<Index> unit() const { return Element<Index>(basis_, Index{}); }

  Tensor<Index> mul(const Tensor<Index>& x, const Tensor<Index>& y) const {
    return tensor_mul<Index>(
        x, y, [this](const Index& a, const Index& b) { return product(a, b); });
  }

 private:
  void check(const Element<Index>& x) const {
    if (x.basis() != basis_)
      throw BasisMismatch("expected a " + std::string(basis_name(basis_)) +
                          " element, got " +
                          std::string(basis_name(x.basis())));
  }

  Basis basis_;
  BasisProduct<Index> product_;
  BasisCoproduct<Index> coproduct_;
  Memo<std::pair<Index, Index>, Element<Index>> products_;
  Memo<Index, Tensor<Index>> coproducts_;
  Memo<Index, Element<Index>> antipodes_;
};

// A basis {b_i} given by a unitriangular expansion in a base basis. Each
// expansion of i holds i with coefficient 1; the remaining terms j are
// strictly comparable to i and therefore have strictly smaller expansions
// (upper or lower sets of an order). This lets from_base peel off terms in
// decreasing order of expansion size.
template <class Index>
class TriangularBasis {
 public:
  TriangularBasis(Basis basis, Basis base, BasisMap<Index> expand)
      : basis_(basis), base_(base), expand_(std::move(expand)) {}

  Basis basis() const { return basis_; }
  Basis base() const { return base_; }

  const Element<Index>& expansion(const Index& i) const {
    return expansions_.get(i, [&] {
      Element<Index> e = expand_(i);
      if (e.basis() != base_ || e.coefficient(i) != 1)
        throw std::logic_error("expansion of " + i.str() +
                               " is not unitriangular");
      return e;
    });
  }

  Element<Index> to_base(const Element<Index>& x) const {
    if (x.basis() != basis_)
      throw BasisMismatch("expected a " + std::string(basis_name(basis_)) +
                          " element");
    Element<Index> out(base_);
    for (const auto& [i, c] : x.terms()) out += c * expansion(i);
    return out;
  }

  Element<Index> from_base(Element<Index> x) const {
    if (x.basis() != base_)
      throw BasisMismatch("expected a " + std::string(basis_name(base_)) +
                          " element");
    Element<Index> out(basis_);
    while (!x.is_zero()) {
      const Index* lead = nullptr;
      std::size_t lead_size = 0;
      for (const auto& [i, c] : x.terms()) {
        const std::size_t s = expansion(i).size();
        if (lead == nullptr || s > lead_size) {
          lead = &i;
          lead_size = s;
        }
      }
      const Index idx = *lead;
      const Integer c = x.coefficient(idx);
      out.add_term(idx, c);
      x -= c * expansion(idx);
      if (x.coefficient(idx) != 0)
        throw std::logic_error("triangular inversion stalled at " + idx.str());
    }
    return out;
  }

 private:
  Basis basis_;
  Basis base_;
  BasisMap<Index> expand_;
  Memo<Index, Element<Index>> expansions_;
};

namespace detail {

template <class Index>
using Tensor3 = Tensor<Index, 3>;

template <class Index>
Tensor3<Index> coassoc_left(const HopfAlgebra<Index>& h, const Index& a) {
  Tensor3<Index> out(h.basis());
  for (const auto& [k, c] : h.coproduct(a).terms())
    for (const auto& [k2, c2] : h.coproduct(k[0]).terms())
      out.add_term({k2[0], k2[1], k[1]}, c * c2);
  return out;
}

template <class Index>
Tensor3<Index> coassoc_right(const HopfAlgebra<Index>& h, const Index& a) {
  Tensor3<Index> out(h.basis());
  for (const auto& [k, c] : h.coproduct(a).terms())
    for (const auto& [k2, c2] : h.coproduct(k[1]).terms())
      out.add_term({k[0], k2[0], k2[1]}, c * c2);
  return out;
}

template <class Index>
std::string join_str(std::initializer_list<const Index*> xs) {
  std::string out;
  for (const Index* x : xs) {
    if (!out.empty()) out += ", ";
    out += x->str();
  }
  return out;
}

}  // namespace detail

// Associativity, unit, coassociativity, counit, bialgebra compatibility and
// both antipode convolution identities, for every basis input of total grade
// 0..max_grade. One result per (axiom, grade).
template <class Index>
Report verify_hopf_axioms(
    const HopfAlgebra<Index>& h, const std::string& label,
    const std::function<const std::vector<Index>&(int)>& basis_of_grade,
    int max_grade) {
  Report report;
  const Basis b = h.basis();
  auto vec = [b](const Index& i) { return Element<Index>(b, i); };
  for (int g = 0; g <= max_grade; ++g) {
    CheckResult assoc{label + ".associativity", g};
    CheckResult unit{label + ".unit", g};
    CheckResult coassoc{label + ".coassociativity", g};
    CheckResult counit{label + ".counit", g};
    CheckResult compat{label + ".bialgebra", g};
    CheckResult anti{label + ".antipode", g};
    auto fail = [](CheckResult& r, std::string w) {
      if (r.ok) r.witness = std::move(w);
      r.ok = false;
    };

    for (int ga = 0; ga <= g; ++ga) {
      for (int gb = 0; ga + gb <= g; ++gb) {
        const int gc = g - ga - gb;
        for (const Index& x : basis_of_grade(ga))
          for (const Index& y : basis_of_grade(gb)) {
            const Element<Index>& xy = h.product(x, y);
            for (const Index& z : basis_of_grade(gc)) {
              if (!assoc.ok) break;
              const Element<Index> left = h.mul(xy, vec(z));
              const Element<Index> right = h.mul(vec(x), h.product(y, z));
              if (left != right)
                fail(assoc, detail::join_str<Index>({&x, &y, &z}));
            }
          }
      }
    }

    for (int ga = 0; ga <= g; ++ga) {
      for (const Index& x : basis_of_grade(ga))
        for (const Index& y : basis_of_grade(g - ga)) {
          if (!compat.ok) break;
          const Tensor<Index> lhs = h.comul(h.product(x, y));
          const Tensor<Index> rhs = h.mul(h.coproduct(x), h.coproduct(y));
          if (lhs != rhs) fail(compat, detail::join_str<Index>({&x, &y}));
        }
    }

    for (const Index& x : basis_of_grade(g)) {
      const Element<Index> ex = vec(x);
      if (h.product(Index{}, x) != ex || h.product(x, Index{}) != ex)
        fail(unit, x.str());
      if (detail::coassoc_left(h, x) != detail::coassoc_right(h, x))
        fail(coassoc, x.str());

      Element<Index> left_counit(b), right_counit(b);
      Element<Index> s_left(b), s_right(b);
      for (const auto& [k, c] : h.coproduct(x).terms()) {
        if (k[0].size() == 0) left_counit += c * vec(k[1]);
        if (k[1].size() == 0) right_counit += c * vec(k[0]);
        s_left += c * h.mul(h.antipode(k[0]), vec(k[1]));
        s_right += c * h.mul(vec(k[0]), h.antipode(k[1]));
      }
      if (left_counit != ex || right_counit != ex) fail(counit, x.str());
      const Element<Index> expected =
          g == 0 ? h.unit() : Element<Index>(b);
      if (s_left != expected || s_right != expected) fail(anti, x.str());
    }
    for (auto* r : {&assoc, &unit, &coassoc, &counit, &compat, &anti})
      report.push_back(std::move(*r));
  }
  return report;
}

}  // namespace nchopf

#endif  // NCHOPF_HOPF_HPP_

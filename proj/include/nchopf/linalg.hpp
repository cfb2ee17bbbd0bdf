#ifndef NCHOPF_LINALG_HPP_
#define NCHOPF_LINALG_HPP_

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nchopf/errors.hpp"
#include "nchopf/setcomp.hpp"
#include "nchopf/setpart.hpp"

namespace nchopf {

using Integer = boost::multiprecision::cpp_int;

enum class Basis { m, p, q, w, qdual, M, Q, W, V, Qdual };

std::string_view basis_name(Basis b);
// Accepts the names printed by basis_name.
Basis parse_basis(std::string_view name);
// True for bases indexed by set partitions.
bool is_partition_basis(Basis b);

template <class Index>
constexpr bool kIndexedByPartitions = std::is_same_v<Index, SetPartition>;

template <class Index>
int grade_of(const Index& idx) {
  return idx.size();
}

// Sparse exact linear combination of basis vectors of one basis. Zero
// coefficients are never stored. Terms may mix grades.
template <class Index>
class Element {
 public:
  using Terms = std::map<Index, Integer>;

  explicit Element(Basis basis) : basis_(basis) {}
  Element(Basis basis, const Index& idx, Integer coeff = 1) : basis_(basis) {
    add_term(idx, coeff);
  }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  // Grade when all terms share one; nullopt for zero or mixed grades.
  std::optional<int> grade() const {
    std::optional<int> g;
    for (const auto& [idx, c] : terms_) {
      if (!g) g = grade_of(idx);
      else if (*g != grade_of(idx)) return std::nullopt;
    }
    return g;
  }

  void add_term(const Index& idx, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(idx, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& other) {
    check_basis(other);
    for (const auto& [idx, c] : other.terms_) add_term(idx, c);
    return *this;
  }
  Element& operator-=(const Element& other) {
    check_basis(other);
    for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
    return *this;
  }

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator-(Element x) {
    for (auto& [idx, c] : x.terms_) c = -c;
    return x;
  }
  friend Element operator*(const Integer& c, Element x) {
    if (c == 0) return Element(x.basis_);
    for (auto& [idx, v] : x.terms_) v *= c;
    return x;
  }
  friend bool operator==(const Element& x, const Element& y) {
    return x.basis_ == y.basis_ && x.terms_ == y.terms_;
  }

  // Same terms, different basis label.
  Element relabel(Basis b) const {
    Element out(b);
    out.terms_ = terms_;
    return out;
  }

 private:
  void check_basis(const Element& other) const {
    if (other.basis_ != basis_)
      throw BasisMismatch("cannot combine " +
                          std::string(basis_name(basis_)) + " and " +
                          std::string(basis_name(other.basis_)) + " elements");
  }

  Basis basis_;
  Terms terms_;
};

// Element of the K-fold tensor power (K >= 2); keys are index tuples.
template <class Index, std::size_t K = 2>
class Tensor {
 public:
  using Key = std::array<Index, K>;
  using Terms = std::map<Key, Integer>;

  explicit Tensor(std::array<Basis, K> bases) : bases_(bases) {}
  explicit Tensor(Basis b) { bases_.fill(b); }

  const std::array<Basis, K>& bases() const { return bases_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Key& key, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& other) {
    if (other.bases_ != bases_)
      throw BasisMismatch("tensor basis mismatch");
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
  friend Tensor operator*(const Integer& c, Tensor x) {
    if (c == 0) return Tensor(x.bases_);
    for (auto& [k, v] : x.terms_) v *= c;
    return x;
  }
  friend bool operator==(const Tensor& x, const Tensor& y) {
    return x.bases_ == y.bases_ && x.terms_ == y.terms_;
  }

 private:
  std::array<Basis, K> bases_;
  Terms terms_;
};

template <class Index>
using BasisMap = std::function<Element<Index>(const Index&)>;
template <class Index>
using BasisProduct = std::function<Element<Index>(const Index&, const Index&)>;

// Extends a map on basis vectors linearly. The result lives in `target`.
template <class Index>
Element<Index> linear_extend(const Element<Index>& x, Basis target,
                             const BasisMap<Index>& f) {
  Element<Index> out(target);
  for (const auto& [idx, c] : x.terms()) out += c * f(idx);
  return out;
}

template <class Index>
Element<Index> bilinear_extend(const Element<Index>& x,
                               const Element<Index>& y, Basis target,
                               const BasisProduct<Index>& f) {
  Element<Index> out(target);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out += (ca * cb) * f(a, b);
  return out;
}

template <class Index>
Tensor<Index> tensor(const Element<Index>& x, const Element<Index>& y) {
  Tensor<Index> out(std::array<Basis, 2>{x.basis(), y.basis()});
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add_term({a, b}, ca * cb);
  return out;
}

// (x1 (x) x2)(y1 (x) y2) = x1 y1 (x) x2 y2, no signs.
template <class Index>
Tensor<Index> tensor_mul(const Tensor<Index>& x, const Tensor<Index>& y,
                         const BasisProduct<Index>& product) {
  Tensor<Index> out(x.bases());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const Element<Index> left = product(kx[0], ky[0]);
      const Element<Index> right = product(kx[1], ky[1]);
      const Integer c = cx * cy;
      for (const auto& [l, cl] : left.terms())
        for (const auto& [r, cr] : right.terms())
          out.add_term({l, r}, c * cl * cr);
    }
  }
  return out;
}

// Applies a linear map to each tensor factor.
template <class Index>
Tensor<Index> tensor_map(const Tensor<Index>& t,
                         std::array<Basis, 2> targets,
                         const BasisMap<Index>& left,
                         const BasisMap<Index>& right) {
  Tensor<Index> out(targets);
  for (const auto& [k, c] : t.terms()) {
    const Element<Index> l = left(k[0]);
    const Element<Index> r = right(k[1]);
    for (const auto& [a, ca] : l.terms())
      for (const auto& [b, cb] : r.terms()) out.add_term({a, b}, c * ca * cb);
  }
  return out;
}

// [x, y] for x in the monomial basis (m or M) and y in its dual (w or W).
template <class Index>
Integer pairing(const Element<Index>& x, const Element<Index>& y) {
  const bool ok = (x.basis() == Basis::m && y.basis() == Basis::w) ||
                  (x.basis() == Basis::M && y.basis() == Basis::W);
  if (!ok)
    throw BasisMismatch("pairing expects (m, w) or (M, W), got (" +
                        std::string(basis_name(x.basis())) + ", " +
                        std::string(basis_name(y.basis())) + ")");
  Integer total = 0;
  const auto& small = x.size() <= y.size() ? x.terms() : y.terms();
  const auto& large = x.size() <= y.size() ? y.terms() : x.terms();
  for (const auto& [idx, c] : small) {
    auto it = large.find(idx);
    if (it != large.end()) total += c * it->second;
  }
  return total;
}

template <class Index>
Integer pairing(const Tensor<Index>& x, const Tensor<Index>& y) {
  const auto bx = x.bases();
  const auto by = y.bases();
  const bool ok = (bx[0] == Basis::m && bx[1] == Basis::m &&
                   by[0] == Basis::w && by[1] == Basis::w) ||
                  (bx[0] == Basis::M && bx[1] == Basis::M &&
                   by[0] == Basis::W && by[1] == Basis::W);
  if (!ok) throw BasisMismatch("tensor pairing expects (m(x)m, w(x)w)");
  Integer total = 0;
  for (const auto& [k, c] : x.terms()) {
    auto it = y.terms().find(k);
    if (it != y.terms().end()) total += c * it->second;
  }
  return total;
}

// Rank over the rationals of an integer matrix (fraction-free Bareiss
// elimination, exact).
int exact_rank(std::vector<std::vector<Integer>> rows);

// Text rendering, terms sorted by canonical index string:
//   "m_{1,2} + 2 m_{1|2}", "-W_(1|2)", "0".
template <class Index>
std::string to_text(const Element<Index>& x);
template <class Index>
std::string to_text(const Tensor<Index>& t);

// {"basis":"m","terms":{"{1,3|2}":2,...}} with keys in canonical-string
// order. Coefficients outside 64 bits are written as decimal strings.
template <class Index>
std::string to_json(const Element<Index>& x);

// Either kind of element from JSON; throws ParseError.
struct AnyElement {
  std::optional<Element<SetPartition>> partitions;
  std::optional<Element<SetComposition>> compositions;
  Basis basis() const {
    return partitions ? partitions->basis() : compositions->basis();
  }
};
AnyElement element_from_json(std::string_view text);

// Parses an index in the text format of `b` and returns the basis vector.
AnyElement basis_vector(Basis b, std::string_view index_text);

}  // namespace nchopf

#endif  // NCHOPF_LINALG_HPP_

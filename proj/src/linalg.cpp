#include "nchopf/linalg.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

namespace nchopf {

namespace {

constexpr std::array<std::pair<Basis, std::string_view>, 10> kNames{{
    {Basis::m, "m"},
    {Basis::p, "p"},
    {Basis::q, "q"},
    {Basis::w, "w"},
    {Basis::qdual, "qdual"},
    {Basis::M, "M"},
    {Basis::Q, "Q"},
    {Basis::W, "W"},
    {Basis::V, "V"},
    {Basis::Qdual, "Qdual"},
}};

std::string coefficient_prefix(const Integer& c, bool first) {
  std::string out;
  if (c < 0) out = first ? "-" : " - ";
  else if (!first) out = " + ";
  const Integer a = abs(c);
  if (a != 1) out += a.str() + " ";
  return out;
}

std::string term_text(Basis b, const std::string& index) {
  return std::string(basis_name(b)) + "_" + index;
}

std::string factor_text(Basis b, const std::string& index, int grade) {
  return grade == 0 ? std::string("1") : term_text(b, index);
}

nlohmann::ordered_json coefficient_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Integer coefficient_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("coefficient must be an integer, got " + j.dump());
}

template <class Index>
std::vector<std::pair<std::string, Integer>> sorted_terms(
    const Element<Index>& x) {
  std::vector<std::pair<std::string, Integer>> out;
  out.reserve(x.size());
  for (const auto& [idx, c] : x.terms()) out.emplace_back(idx.str(), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

std::string_view basis_name(Basis b) {
  for (const auto& [basis, name] : kNames)
    if (basis == b) return name;
  return "?";
}

Basis parse_basis(std::string_view name) {
  for (const auto& [basis, n] : kNames)
    if (n == name) return basis;
  throw ParseError("unknown basis '" + std::string(name) +
                   "' (expected m p q w qdual M Q W V Qdual)");
}

bool is_partition_basis(Basis b) {
  switch (b) {
    case Basis::m:
    case Basis::p:
    case Basis::q:
    case Basis::w:
    case Basis::qdual:
      return true;
    default:
      return false;
  }
}

template <class Index>
std::string to_text(const Element<Index>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : sorted_terms(x)) {
    out += coefficient_prefix(c, first) + term_text(x.basis(), key);
    first = false;
  }
  return out;
}

template <class Index>
std::string to_text(const Tensor<Index>& t) {
  if (t.is_zero()) return "0";
  std::vector<std::tuple<std::string, std::string, Integer>> rows;
  for (const auto& [k, c] : t.terms()) {
    rows.emplace_back(factor_text(t.bases()[0], k[0].str(), k[0].size()),
                      factor_text(t.bases()[1], k[1].str(), k[1].size()), c);
  }
  // Grade of the left factor descending, then canonical strings.
  std::vector<std::size_t> order(rows.size());
  std::vector<int> left_grade;
  for (const auto& [k, c] : t.terms()) left_grade.push_back(k[0].size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (left_grade[a] != left_grade[b]) return left_grade[a] > left_grade[b];
    if (std::get<0>(rows[a]) != std::get<0>(rows[b]))
      return std::get<0>(rows[a]) < std::get<0>(rows[b]);
    return std::get<1>(rows[a]) < std::get<1>(rows[b]);
  });
  std::string out;
  bool first = true;
  for (std::size_t i : order) {
    const auto& [l, r, c] = rows[i];
    out += coefficient_prefix(c, first) + l + " (x) " + r;
    first = false;
  }
  return out;
}

template <class Index>
std::string to_json(const Element<Index>& x) {
  // ordered_json keeps insertion order, so the keys stay canonically sorted.
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (const auto& [key, c] : sorted_terms(x)) terms[key] = coefficient_json(c);
  nlohmann::ordered_json j;
  j["basis"] = std::string(basis_name(x.basis()));
  j["terms"] = std::move(terms);
  return j.dump();
}

template std::string to_text(const Element<SetPartition>&);
template std::string to_text(const Element<SetComposition>&);
template std::string to_text(const Tensor<SetPartition>&);
template std::string to_text(const Tensor<SetComposition>&);
template std::string to_json(const Element<SetPartition>&);
template std::string to_json(const Element<SetComposition>&);

int exact_rank(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Integer& p = rows[rank][c];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Integer f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = (p * rows[r][k] - f * rows[rank][k]) / prev;
    }
    prev = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

AnyElement element_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid element JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_string() ||
      !j.contains("terms") || !j["terms"].is_object())
    throw ParseError(
        "element JSON must look like {\"basis\":\"m\",\"terms\":{...}}");
  const Basis b = parse_basis(j["basis"].get<std::string>());
  AnyElement out;
  if (is_partition_basis(b)) {
    Element<SetPartition> e(b);
    for (const auto& [k, v] : j["terms"].items())
      e.add_term(SetPartition::parse(k), coefficient_from_json(v));
    out.partitions = std::move(e);
  } else {
    Element<SetComposition> e(b);
    for (const auto& [k, v] : j["terms"].items())
      e.add_term(SetComposition::parse(k), coefficient_from_json(v));
    out.compositions = std::move(e);
  }
  return out;
}

AnyElement basis_vector(Basis b, std::string_view index_text) {
  AnyElement out;
  if (is_partition_basis(b))
    out.partitions = Element<SetPartition>(b, SetPartition::parse(index_text));
  else
    out.compositions =
        Element<SetComposition>(b, SetComposition::parse(index_text));
  return out;
}

}  // namespace nchopf

#include "nchopf/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nchopf/enumerate.hpp"
#include "nchopf/ncqsym.hpp"
#include "nchopf/ncsym.hpp"
#include "nchopf/parallel.hpp"
#include "nchopf/posets.hpp"
#include "nchopf/realization.hpp"

namespace nchopf {

namespace {

enum class Format { text, json, dot };

// Invalid input on an otherwise well-formed command line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Output {
  std::ostream& out;
  std::ostream& err;
  Format format;
};

void require_not_dot(const Output& o, const std::string& what) {
  if (o.format == Format::dot)
    throw UsageError("format dot is not available for " + what);
}

template <class Index>
std::string tensor_json(const Tensor<Index>& t) {
  std::vector<std::tuple<std::string, std::string, Integer>> rows;
  for (const auto& [k, c] : t.terms())
    rows.emplace_back(k[0].str(), k[1].str(), c);
  std::sort(rows.begin(), rows.end());
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [l, r, c] : rows) {
    nlohmann::ordered_json coeff;
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
      coeff = static_cast<std::int64_t>(c);
    else
      coeff = c.str();
    terms.push_back({l, r, coeff});
  }
  nlohmann::ordered_json j;
  j["bases"] = {std::string(basis_name(t.bases()[0])),
                std::string(basis_name(t.bases()[1]))};
  j["terms"] = std::move(terms);
  return j.dump();
}

template <class Index>
void print_element(const Output& o, const Element<Index>& x) {
  require_not_dot(o, "elements");
  o.out << (o.format == Format::json ? to_json(x) : to_text(x)) << "\n";
}

template <class Index>
void print_tensor(const Output& o, const Tensor<Index>& t) {
  require_not_dot(o, "tensors");
  o.out << (o.format == Format::json ? tensor_json(t) : to_text(t)) << "\n";
}

int cmd_mul(const Output& o, const std::string& basis, const std::string& i1,
            const std::string& i2) {
  const Basis b = parse_basis(basis);
  const AnyElement x = basis_vector(b, i1);
  const AnyElement y = basis_vector(b, i2);
  if (x.partitions) print_element(o, ncsym::mul(*x.partitions, *y.partitions));
  else print_element(o, ncqsym::mul(*x.compositions, *y.compositions));
  return kExitOk;
}

int cmd_comul(const Output& o, const std::string& basis,
              const std::string& idx) {
  const AnyElement x = basis_vector(parse_basis(basis), idx);
  if (x.partitions) print_tensor(o, ncsym::comul(*x.partitions));
  else print_tensor(o, ncqsym::comul(*x.compositions));
  return kExitOk;
}

int cmd_antipode(const Output& o, const std::string& basis,
                 const std::string& idx) {
  const AnyElement x = basis_vector(parse_basis(basis), idx);
  if (x.partitions) print_element(o, ncsym::antipode(*x.partitions));
  else print_element(o, ncqsym::antipode(*x.compositions));
  return kExitOk;
}

bool is_dual(Basis b) {
  return b == Basis::w || b == Basis::qdual || b == Basis::W ||
         b == Basis::V || b == Basis::Qdual;
}

int cmd_convert(const Output& o, const std::string& from, const std::string& to,
                const std::string& json) {
  const Basis f = parse_basis(from);
  const Basis t = parse_basis(to);
  const AnyElement x = element_from_json(json);
  if (x.basis() != f)
    throw UsageError("element is in basis " +
                     std::string(basis_name(x.basis())) + ", not " + from);
  const bool same_kind = is_partition_basis(f) == is_partition_basis(t);
  if (same_kind) {
    if (x.partitions) print_element(o, ncsym::convert(*x.partitions, t));
    else print_element(o, ncqsym::convert(*x.compositions, t));
    return kExitOk;
  }
  if (is_dual(f) != is_dual(t))
    throw UsageError("cannot convert between an algebra and its dual");
  if (x.partitions && !is_dual(f)) {
    const ncsym::Elt m = ncsym::convert(*x.partitions, Basis::m);
    print_element(o, ncqsym::convert(ncqsym::theta(m), t));
    return kExitOk;
  }
  if (x.compositions && is_dual(f)) {
    const ncqsym::Elt w = ncqsym::convert(*x.compositions, Basis::W);
    print_element(o, ncsym::convert(ncqsym::theta_star(w), t));
    return kExitOk;
  }
  throw UsageError(std::string("no map from ") + from + " to " + to +
                   " (theta goes NCSym -> NCQSym, theta* goes the other way "
                   "on the duals)");
}

int cmd_pair(const Output& o, const std::string& j1, const std::string& j2) {
  require_not_dot(o, "pairings");
  const AnyElement x = element_from_json(j1);
  const AnyElement y = element_from_json(j2);
  Integer v;
  if (x.partitions && y.partitions) v = ncsym::pair(*x.partitions, *y.partitions);
  else if (x.compositions && y.compositions)
    v = ncqsym::pair(*x.compositions, *y.compositions);
  else
    throw BasisMismatch("cannot pair set partitions with set compositions");
  if (o.format == Format::json) o.out << "{\"pairing\":" << v.str() << "}\n";
  else o.out << v.str() << "\n";
  return kExitOk;
}

int parse_size(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(text, &used);
    if (used != text.size() || n < 0) throw std::invalid_argument(text);
    return n;
  } catch (const std::exception&) {
    throw UsageError(what + " must be a nonnegative integer, got '" + text +
                     "'");
  }
}

int cmd_poset(const Output& o, const std::string& order, const std::string& arg,
              bool dot) {
  FinitePoset p = [&] {
    if (order == "sharp") return posets::sharp_class(Composition::parse(arg));
    const int n = parse_size(arg, "poset size");
    if (order == "star") return posets::star_partitions(n);
    if (order == "star-comp") return posets::star_compositions(n);
    if (order == "refinement") return posets::refinement_partitions(n);
    if (order == "refinement-comp") return posets::refinement_compositions(n);
    if (order == "sharp-all") return posets::sharp_compositions(n);
    throw UsageError("unknown order '" + order +
                     "' (star, star-comp, refinement, refinement-comp, sharp, "
                     "sharp-all)");
  }();
  const std::string name = order + " " + arg;
  if (dot || o.format == Format::dot) {
    o.out << p.to_dot(name);
  } else if (o.format == Format::json) {
    o.out << p.to_json() << "\n";
  } else {
    const PosetStructure s = p.structure();
    o.out << name << ": " << p.size() << " elements, " << p.covers().size()
          << " covers\n";
    const int top =
        s.rank.empty() ? -1 : *std::max_element(s.rank.begin(), s.rank.end());
    for (int h = 0; h <= top; ++h) {
      o.out << "rank " << h << ":";
      for (std::size_t i = 0; i < p.size(); ++i)
        if (s.rank[i] == h) o.out << " " << p.labels()[i];
      o.out << "\n";
    }
    for (const auto& [a, b] : p.covers())
      o.out << p.labels()[a] << " < " << p.labels()[b] << "\n";
    o.out << "ranked: " << (s.ranked ? "yes" : "no")
          << ", eulerian: " << (s.eulerian ? "yes" : "no")
          << ", boolean down-sets: " << (s.boolean_downsets ? "yes" : "no")
          << "\n";
  }
  return kExitOk;
}

int print_report(const Output& o, const Report& report) {
  if (o.format == Format::json) {
    o.out << report_to_json(report) << "\n";
  } else {
    std::size_t failed = 0;
    for (const auto& r : report) {
      o.out << (r.ok ? "PASS " : "FAIL ") << r.check;
      if (r.grade >= 0) o.out << " [" << r.grade << "]";
      if (!r.witness.empty()) o.out << " " << r.witness;
      if (!r.detail.empty()) o.out << " (" << r.detail << ")";
      o.out << "\n";
      if (!r.ok) ++failed;
    }
    o.out << report.size() << " checks, " << failed << " failed\n";
  }
  return all_passed(report) ? kExitOk : kExitVerificationFailed;
}

int cmd_count(const Output& o, const std::string& what, int n) {
  require_not_dot(o, "counts");
  static const std::vector<std::string> identities{"i",  "ii", "iii",
                                                   "iv", "v",  "vi"};
  if (std::find(identities.begin(), identities.end(), what) !=
      identities.end())
    return print_report(o, enumerate::series_identity_check(what, n));

  if (what == "bell" || what == "ordered_bell") {
    if (o.format == Format::json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (int k = 0; k <= n; ++k)
        j.push_back(what == "bell" ? enumerate::bell(k).str()
                                   : enumerate::ordered_bell(k).str());
      o.out << nlohmann::ordered_json{{"table", what}, {"values", j}}.dump()
            << "\n";
    } else {
      o.out << "n\t" << what << "\n";
      for (int k = 0; k <= n; ++k)
        o.out << k << "\t"
              << (what == "bell" ? enumerate::bell(k)
                                 : enumerate::ordered_bell(k))
              << "\n";
    }
    return kExitOk;
  }

  CountTable t{"stirling2", {}};
  if (what == "stirling2") {
    t.rows.assign(n + 1, std::vector<Integer>(n + 1, 0));
    for (int k = 0; k <= n; ++k)
      for (int i = k == 0 ? 0 : 1; i <= k; ++i)
        t.rows[k][i] = enumerate::stirling2(k, i);
  } else {
    try {
      t = enumerate::table_by_name(what, n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(e.what()) +
                       "; also bell, ordered_bell, stirling2, i..vi");
    }
  }
  if (o.format == Format::json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& c : row) r.push_back(c.str());
      rows.push_back(std::move(r));
    }
    o.out << nlohmann::ordered_json{{"table", t.name}, {"rows", rows}}.dump()
          << "\n";
  } else {
    o.out << enumerate::table_tsv(t);
  }
  return kExitOk;
}

struct Suite {
  std::string name;
  std::function<Report(int)> run;
  // Run once per grade 0..n so progress can be reported; otherwise a single
  // call at n.
  bool per_grade = true;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"ncsym-hopf", ncsym::verify_hopf},
      {"ncsym-duality", ncsym::verify_duality},
      {"ncsym-multiplicative", ncsym::verify_multiplicative},
      {"ncsym-free", ncsym::verify_free},
      {"ncsym-cofree", ncsym::verify_cofree},
      {"ncsym-dual-coproduct", ncsym::verify_dual_coproduct_forms},
      {"ncsym-zeta", ncsym::verify_zeta_factorization},
      {"ncsym-qdual", ncsym::verify_qdual},
      {"ncqsym-hopf", ncqsym::verify_hopf},
      {"ncqsym-duality", ncqsym::verify_duality},
      {"ncqsym-multiplicative", ncqsym::verify_multiplicative},
      {"ncqsym-free-cofree", ncqsym::verify_free_cofree},
      {"ncqsym-theta", ncqsym::verify_theta},
      {"ncqsym-qdual", ncqsym::verify_qdual},
      {"posets-partitions", posets::verify_partition_orders},
      {"posets-compositions", posets::verify_composition_orders},
      {"oracle-m", [](int n) { return realization::verify_oracle(n, -1); }},
      {"oracle-M", [](int n) { return realization::verify_oracle(-1, n); }},
      {"series",
       [](int n) {
         return enumerate::verify_series(n, std::min(n, 7), std::min(n, 5));
       },
       false},
  };
  return all;
}

std::vector<const Suite*> resolve_suite(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> groups{
      {"hopf", {"ncsym-hopf", "ncqsym-hopf"}},
      {"duality", {"ncsym-duality", "ncqsym-duality"}},
      {"multiplicative", {"ncsym-multiplicative", "ncqsym-multiplicative"}},
      {"qdual", {"ncsym-qdual", "ncqsym-qdual"}},
      {"posets", {"posets-partitions", "posets-compositions"}},
      {"oracle", {"oracle-m", "oracle-M"}},
  };
  std::vector<std::string> names;
  if (name == "all") {
    for (const auto& s : suites()) names.push_back(s.name);
  } else if (auto it = groups.find(name); it != groups.end()) {
    names = it->second;
  } else {
    names = {name};
  }
  std::vector<const Suite*> out;
  for (const auto& n : names) {
    auto it = std::find_if(suites().begin(), suites().end(),
                           [&](const Suite& s) { return s.name == n; });
    if (it == suites().end())
      throw UsageError("unknown suite '" + name +
                       "'; see `nchopf verify --help` for the list");
    out.push_back(&*it);
  }
  return out;
}

int cmd_verify(const Output& o, const std::string& name, int n) {
  require_not_dot(o, "verification reports");
  const auto selected = resolve_suite(name);
  std::vector<Report> results(selected.size());
  std::mutex progress;
  parallel_for(selected.size(), [&](std::size_t k) {
    const Suite& s = *selected[k];
    if (!s.per_grade) {
      results[k] = s.run(n);
      std::lock_guard lock(progress);
      o.err << s.name << ": " << results[k].size() << " checks\n";
      return;
    }
    for (int g = 0; g <= n; ++g) {
      const Report r = s.run(g);
      std::size_t kept = 0;
      for (const auto& c : r)
        if (c.grade == g || (c.grade < 0 && g == n)) {
          results[k].push_back(c);
          ++kept;
        }
      std::lock_guard lock(progress);
      o.err << s.name << ": grade " << g << ", " << kept << " checks\n";
    }
  });
  Report all;
  for (const auto& r : results) append(all, r);
  return print_report(o, all);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  return names;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact arithmetic in NCSym, NCQSym and their graded duals",
               "nchopf"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  std::string basis, idx1, idx2, from, to, elt1, elt2, order, arg, what;
  int n = 0;
  bool dot = false;

  auto* mul = app.add_subcommand("mul", "Product of two basis elements");
  mul->add_option("basis", basis)->required();
  mul->add_option("index1", idx1)->required();
  mul->add_option("index2", idx2)->required();

  auto* comul = app.add_subcommand("comul", "Coproduct of a basis element");
  comul->add_option("basis", basis)->required();
  comul->add_option("index", idx1)->required();

  auto* convert = app.add_subcommand("convert", "Change of basis");
  convert->add_option("from", from)->required();
  convert->add_option("to", to)->required();
  convert->add_option("element", elt1, "Element as JSON")->required();

  auto* pair = app.add_subcommand("pair", "Pairing of an element and a dual one");
  pair->add_option("element1", elt1)->required();
  pair->add_option("element2", elt2)->required();

  auto* antipode = app.add_subcommand("antipode", "Antipode of a basis element");
  antipode->add_option("basis", basis)->required();
  antipode->add_option("index", idx1)->required();

  auto* poset = app.add_subcommand(
      "poset", "Order on set partitions or compositions of [n], or a sharp class");
  poset->add_option("order", order,
                    "star, star-comp, refinement, refinement-comp, sharp or sharp-all")
      ->required();
  poset->add_option("n", arg, "Size n, or a composition for sharp")->required();
  poset->add_flag("--dot", dot, "Write DOT");

  auto* count = app.add_subcommand("count", "Counting tables and identities");
  count->add_option("what", what,
                    "atomic, comp_atomic, lyndon, sharp_rank, bell, "
                    "ordered_bell, stirling2, or an identity i..vi")
      ->required();
  count->add_option("nMax", n)->required()->check(CLI::NonNegativeNumber);

  std::string suite_help = "all, hopf, duality, multiplicative, qdual, posets, oracle";
  for (const auto& s : verify_suite_names()) suite_help += ", " + s;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", what, suite_help)->required();
  verify->add_option("nMax", n)->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const Output o{out, err,
                 format == "json"  ? Format::json
                 : format == "dot" ? Format::dot
                                   : Format::text};
  try {
    if (*mul) return cmd_mul(o, basis, idx1, idx2);
    if (*comul) return cmd_comul(o, basis, idx1);
    if (*convert) return cmd_convert(o, from, to, elt1);
    if (*pair) return cmd_pair(o, elt1, elt2);
    if (*antipode) return cmd_antipode(o, basis, idx1);
    if (*poset) return cmd_poset(o, order, arg, dot);
    if (*count) return cmd_count(o, what, n);
    if (*verify) return cmd_verify(o, what, n);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nchopf

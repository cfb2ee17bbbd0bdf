#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "nchopf/cli.hpp"
#include "nchopf/enumerate.hpp"
#include "nchopf/linalg.hpp"
#include "nchopf/ncqsym.hpp"
#include "nchopf/ncsym.hpp"
#include "nchopf/setcomp.hpp"
#include "nchopf/setpart.hpp"

namespace py = pybind11;
using namespace nchopf;

namespace {

py::int_ to_py(const Integer& c) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(c.str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_& v) {
  return Integer(py::str(v).cast<std::string>());
}

template <class Index>
py::dict element_to_dict(const Element<Index>& x) {
  py::dict d;
  for (const auto& [idx, c] : x.terms()) d[py::str(idx.str())] = to_py(c);
  return d;
}

template <class Index>
py::dict tensor_to_dict(const Tensor<Index>& t) {
  py::dict d;
  for (const auto& [k, c] : t.terms())
    d[py::make_tuple(k[0].str(), k[1].str())] = to_py(c);
  return d;
}

template <class Index>
Element<Index> dict_to_element(Basis b, const py::dict& terms) {
  Element<Index> x(b);
  for (const auto& [k, v] : terms)
    x.add_term(Index::parse(k.template cast<std::string>()),
               from_py(v.template cast<py::int_>()));
  return x;
}

AnyElement any_element(const std::string& basis, const py::dict& terms) {
  const Basis b = parse_basis(basis);
  AnyElement out;
  if (is_partition_basis(b))
    out.partitions = dict_to_element<SetPartition>(b, terms);
  else
    out.compositions = dict_to_element<SetComposition>(b, terms);
  return out;
}

py::dict mul(const std::string& basis, const py::dict& x, const py::dict& y) {
  const AnyElement a = any_element(basis, x);
  const AnyElement b = any_element(basis, y);
  if (a.partitions)
    return element_to_dict(ncsym::mul(*a.partitions, *b.partitions));
  return element_to_dict(ncqsym::mul(*a.compositions, *b.compositions));
}

py::dict comul(const std::string& basis, const py::dict& x) {
  const AnyElement a = any_element(basis, x);
  if (a.partitions) return tensor_to_dict(ncsym::comul(*a.partitions));
  return tensor_to_dict(ncqsym::comul(*a.compositions));
}

py::dict antipode(const std::string& basis, const py::dict& x) {
  const AnyElement a = any_element(basis, x);
  if (a.partitions) return element_to_dict(ncsym::antipode(*a.partitions));
  return element_to_dict(ncqsym::antipode(*a.compositions));
}

py::dict convert(const std::string& from, const std::string& to,
                 const py::dict& x) {
  const AnyElement a = any_element(from, x);
  const Basis target = parse_basis(to);
  if (a.partitions) {
    if (!is_partition_basis(target)) {
      const ncsym::Elt m = ncsym::convert(*a.partitions, Basis::m);
      return element_to_dict(ncqsym::convert(ncqsym::theta(m), target));
    }
    return element_to_dict(ncsym::convert(*a.partitions, target));
  }
  if (is_partition_basis(target)) {
    const ncqsym::Elt w = ncqsym::convert(*a.compositions, Basis::W);
    return element_to_dict(ncsym::convert(ncqsym::theta_star(w), target));
  }
  return element_to_dict(ncqsym::convert(*a.compositions, target));
}

py::int_ pair(const std::string& xb, const py::dict& x, const std::string& yb,
              const py::dict& y) {
  const AnyElement a = any_element(xb, x);
  const AnyElement b = any_element(yb, y);
  if (a.partitions && b.partitions)
    return to_py(ncsym::pair(*a.partitions, *b.partitions));
  if (a.compositions && b.compositions)
    return to_py(ncqsym::pair(*a.compositions, *b.compositions));
  throw BasisMismatch("cannot pair set partitions with set compositions");
}

std::string text(const std::string& basis, const py::dict& x) {
  const AnyElement a = any_element(basis, x);
  return a.partitions ? to_text(*a.partitions) : to_text(*a.compositions);
}

std::tuple<int, std::string, std::string> cli(
    const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return {code, out.str(), err.str()};
}

std::vector<std::string> strings(const std::vector<SetPartition>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.str());
  return out;
}

std::vector<std::string> strings(const std::vector<SetComposition>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in NCSym, NCQSym and their graded duals";

  py::register_exception<BasisMismatch>(m, "BasisMismatch", PyExc_ValueError);
  py::register_exception<SizeMismatch>(m, "SizeMismatch", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("canonical_partition",
        [](const std::string& s) { return SetPartition::parse(s).str(); });
  m.def("canonical_composition",
        [](const std::string& s) { return SetComposition::parse(s).str(); });
  m.def("set_partitions", [](int n) { return strings(setpart::enumerate(n)); });
  m.def("set_compositions", [](int n) { return strings(setcomp::enumerate(n)); });
  m.def("meet", [](const std::string& a, const std::string& b) {
    return setpart::meet(SetPartition::parse(a), SetPartition::parse(b)).str();
  });
  m.def("join", [](const std::string& a, const std::string& b) {
    return setpart::join(SetPartition::parse(a), SetPartition::parse(b)).str();
  });
  m.def("atomic_split", [](const std::string& a) {
    if (!a.empty() && a.front() == '(')
      return strings(setcomp::atomic_split(SetComposition::parse(a)));
    return strings(setpart::atomic_split(SetPartition::parse(a)));
  });

  m.def("mul", &mul, py::arg("basis"), py::arg("x"), py::arg("y"));
  m.def("comul", &comul, py::arg("basis"), py::arg("x"));
  m.def("antipode", &antipode, py::arg("basis"), py::arg("x"));
  m.def("convert", &convert, py::arg("from_basis"), py::arg("to_basis"),
        py::arg("x"));
  m.def("pair", &pair, py::arg("x_basis"), py::arg("x"), py::arg("y_basis"),
        py::arg("y"));
  m.def("to_text", &text, py::arg("basis"), py::arg("x"));

  m.def("bell", [](int n) { return to_py(enumerate::bell(n)); });
  m.def("ordered_bell", [](int n) { return to_py(enumerate::ordered_bell(n)); });
  m.def("stirling2", [](int n, int k) { return to_py(enumerate::stirling2(n, k)); });

  m.def("run_cli", &cli, py::arg("args"),
        "Run a command line; returns (exit status, stdout, stderr).");
}

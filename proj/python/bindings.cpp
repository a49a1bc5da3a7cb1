#include "qosc/errors.hpp"
#include "qosc/fock.hpp"
#include "qosc/gauss.hpp"
#include "qosc/hamiltonian.hpp"
#include "qosc/polychronakos.hpp"
#include "qosc/reducibility.hpp"
#include "qosc/report.hpp"
#include "qosc/roots.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace qosc;

namespace {

py::int_ to_py(const BigInt& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

py::list to_py(const QPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

py::list ranges(const std::vector<IndexRange>& blocks) {
  py::list out;
  for (const auto& b : blocks) out.append(py::make_tuple(b.begin, b.end));
  return out;
}

py::dict to_py(const IrrepDecomposition& d) {
  py::dict out;
  out["ambient_dim"] = d.ambient_dim;
  out["block_count"] = d.block_count;
  out["block_dim"] = d.block_dim;
  out["blocks"] = ranges(d.blocks);
  return out;
}

py::list matrix(const FockMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.dim(); ++c) row.append(m(r, c));
    rows.append(row);
  }
  return rows;
}

// Accepts RealQ, RootOfUnity or a plain positive float.
DeformParam to_param(const py::handle& obj) {
  if (py::isinstance<RootOfUnity>(obj)) return obj.cast<RootOfUnity>();
  if (py::isinstance<RealQ>(obj)) return obj.cast<RealQ>();
  if (py::isinstance<py::float_>(obj) || py::isinstance<py::int_>(obj)) return RealQ(obj.cast<double>());
  throw py::type_error("param must be RealQ, RootOfUnity or float");
}

}  // namespace

PYBIND11_MODULE(_qosc, m) {
  m.doc() = "Gauss polynomials, roots of unity and the q-deformed oscillator";
  m.attr("__version__") = kVersion;

  py::register_exception<NotDivisible>(m, "NotDivisible", PyExc_ArithmeticError);
  py::register_exception<DegenerateRoot>(m, "DegenerateRoot", PyExc_ArithmeticError);
  py::register_exception<DimensionTooSmall>(m, "DimensionTooSmall", PyExc_ValueError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);

  py::class_<RealQ>(m, "RealQ")
      .def(py::init<double>(), py::arg("q"))
      .def_property_readonly("q", &RealQ::value)
      .def("__repr__", [](const RealQ& q) { return describe(DeformParam(q)); });

  py::class_<RootOfUnity>(m, "RootOfUnity")
      .def(py::init<int, int>(), py::arg("m"), py::arg("j"))
      .def_property_readonly("m", &RootOfUnity::order)
      .def_property_readonly("j", &RootOfUnity::index)
      .def("__repr__", [](const RootOfUnity& r) { return describe(DeformParam(r)); });

  // Gauss polynomials; coefficient lists hold exact Python ints.
  m.def("gauss_binomial", [](std::uint32_t n, long k) { return to_py(gauss_binomial(n, k)); }, py::arg("n"), py::arg("m"));
  m.def("gauss_generating", [](std::uint32_t n, std::uint32_t k) { return to_py(gauss_generating(n, k)); }, py::arg("n"), py::arg("m"));
  m.def("q_number", [](std::uint32_t n) { return to_py(q_number(n)); }, py::arg("n"));
  m.def("partition_count", [](std::uint32_t target, std::uint32_t parts, std::uint32_t size) {
    return to_py(partition_count({target, parts, size}));
  }, py::arg("target"), py::arg("max_parts"), py::arg("max_part_size"));
  m.def("divide_exact", [](const std::vector<long long>& num, const std::vector<long long>& den) {
    auto lift = [](const std::vector<long long>& v) {
      std::vector<BigInt> c(v.begin(), v.end());
      return QPoly(std::move(c));
    };
    return to_py(qpoly_divide_exact(lift(num), lift(den)));
  }, py::arg("num"), py::arg("den"));

  // Roots of unity.
  m.def("is_primitive", &is_primitive, py::arg("root"));
  m.def("canonical_reduce", [](const RootOfUnity& r) {
    const ReducedRoot red = canonical_reduce(r);
    return py::make_tuple(red.order, red.index);
  }, py::arg("root"));
  m.def("q_number_is_zero", &q_number_is_zero, py::arg("n"), py::arg("root"));
  m.def("q_bracket", [](long x, const RootOfUnity& r) { return q_bracket(x, HalfRoot(r)); }, py::arg("x"), py::arg("root"));
  m.def("q_number_value", [](const py::object& param, long n) { return to_double(q_number_value(to_param(param), n)); },
        py::arg("param"), py::arg("n"));
  m.def("verify_bracket_relations", [](int m_max, double tol) {
    const BracketReport rep = verify_bracket_relations(m_max, tol);
    py::dict out;
    for (const auto& rel : rep.relations) out[py::str(rel.name)] = rel.max_residual;
    return out;
  }, py::arg("m_max"), py::arg("tolerance") = 1e-10);

  // Fock-space operators.
  m.def("ladder", [](const py::object& param, std::size_t dim) {
    const DeformParam p = to_param(param);
    const LadderPair lp = build_ladder(p, dim);
    return py::make_tuple(matrix(lp.a_plus), matrix(lp.a_minus));
  }, py::arg("param"), py::arg("dim"), "Returns (a_plus, a_minus) as nested lists of complex.");
  m.def("verify_relations", [](const py::object& param, std::size_t dim) {
    const DeformParam p = to_param(param);
    py::dict out;
    for (const auto& r : verify_relations(p, dim)) out[py::str(to_string(r.relation_id))] = r.max_abs_residual;
    return out;
  }, py::arg("param"), py::arg("dim"));

  // Reducibility.
  m.def("classify", [](const py::object& param) {
    const DeformParam p = to_param(param);
    py::dict out;
    const RepClass cls = classify(p);
    if (std::holds_alternative<IrreducibleInfinite>(cls)) {
      out["class"] = "irreducible_infinite";
    } else if (const auto* fin = std::get_if<IrreducibleFinite>(&cls)) {
      out["class"] = "irreducible_finite";
      out["dim"] = fin->dim;
    } else {
      out["class"] = "reducible";
      out["decomposition"] = to_py(std::get<Reducible>(cls).decomposition);
    }
    return out;
  }, py::arg("param"));
  m.def("decompose", [](const RootOfUnity& r) { return to_py(decompose(r)); }, py::arg("root"));
  m.def("smallest_vanishing_index", &smallest_vanishing_index, py::arg("root"));
  m.def("invariant_subspaces_hold", [](const RootOfUnity& r) { return verify_invariant_subspaces(r, decompose(r)).passed(); },
        py::arg("root"));

  // Hamiltonian.
  m.def("hamiltonian_diagonal", [](const py::object& param, std::optional<std::size_t> dim) {
    const DeformParam p = to_param(param);
    const std::size_t d = dim ? *dim : natural_dim(p).value_or(0);
    if (d == 0) throw DimensionTooSmall("a dimension is required for real q");
    return spectrum_report(p, d).diagonal;
  }, py::arg("param"), py::arg("dim") = py::none());
  m.def("spectrum_report", [](const py::object& param, std::size_t dim) {
    const DeformParam p = to_param(param);
    const SpectrumReport r = spectrum_report(p, dim);
    py::dict out;
    out["dim"] = r.dim;
    out["energy_unit"] = r.energy_unit;
    out["diagonal"] = r.diagonal;
    out["blocks"] = r.blocks ? py::object(to_py(*r.blocks)) : py::object(py::none());
    out["block_pattern_verified"] = r.block_pattern_verified;
    out["eigensolver_discrepancy"] = r.eigensolver_discrepancy;
    return out;
  }, py::arg("param"), py::arg("dim"));
  m.def("inverse_root_check", &inverse_root_check, py::arg("root"));

  // Realization through undeformed operators.
  m.def("realization_discrepancy", [](const py::object& param, std::size_t dim) { return realization_discrepancy(to_param(param), dim); }, py::arg("param"), py::arg("dim"));
  m.def("F_values", [](const py::object& param, std::size_t n_max) {
    const DeformParam p = to_param(param);
    const FRecurrenceReport r = verify_F_recurrence(p, n_max);
    return py::make_tuple(r.values, r.passed());
  }, py::arg("param"), py::arg("n_max"), "Returns (values, recurrence_holds).");
  m.def("unitarity_check", [](const py::object& param, std::size_t dim) { return unitarity_check(to_param(param), dim); }, py::arg("param"), py::arg("dim"));
}

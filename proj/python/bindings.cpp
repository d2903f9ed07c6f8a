#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "erdos/assignment.hpp"
#include "erdos/birkhoff.hpp"
#include "erdos/enumerator.hpp"
#include "erdos/errors.hpp"
#include "erdos/gram.hpp"
#include "erdos/matrix.hpp"
#include "erdos/surd.hpp"

namespace py = pybind11;
using namespace erdos;

// Rationals cross the boundary as fractions.Fraction. On the way in, int,
// Fraction and "p/q" strings are accepted.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = Rational::parse(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::bool_>(src)) return false;
      if (py::isinstance<py::int_>(src)) {
        value = Rational(BigInt(py::str(src).cast<std::string>()));
        return true;
      }
      if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator") &&
          !py::isinstance<py::float_>(src)) {
        const auto num = py::str(src.attr("numerator")).cast<std::string>();
        const auto den = py::str(src.attr("denominator")).cast<std::string>();
        value = Rational(BigInt(num), BigInt(den));
        return true;
      }
    } catch (const Error&) {
      return false;
    }
    return false;
  }

  static handle cast(const Rational& q, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::int_ num(py::reinterpret_steal<py::object>(PyLong_FromString(q.num().get_str().c_str(), nullptr, 10)));
    py::int_ den(py::reinterpret_steal<py::object>(PyLong_FromString(q.den().get_str().c_str(), nullptr, 10)));
    return fraction(num, den).release();
  }
};
}  // namespace pybind11::detail

namespace {

using Rows = std::vector<std::vector<Rational>>;

Rows to_rows(const RationalMatrix& m) {
  Rows rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i].assign(m.row(i).begin(), m.row(i).end());
  return rows;
}

BistochasticMatrix bistochastic(const Rows& rows) { return BistochasticMatrix::from(RationalMatrix::from_rows(rows)); }

// Permutations are 1-based image lists, as in the CLI's JSON.
using Images = std::vector<int>;

std::vector<Permutation> perms_from(const std::vector<Images>& lists) {
  std::vector<Permutation> out;
  out.reserve(lists.size());
  for (const auto& l : lists) out.push_back(Permutation::from_one_based(l));
  return out;
}

std::vector<Images> images_of(const std::vector<Permutation>& perms) {
  std::vector<Images> out;
  for (const auto& p : perms) out.push_back(p.one_based());
  return out;
}

MaxTraceMethod method_from(const std::string& name) {
  if (name == "brute") return MaxTraceMethod::brute;
  if (name == "hungarian") return MaxTraceMethod::hungarian;
  if (name == "auto") return MaxTraceMethod::automatic;
  throw RangeError("unknown method '" + name + "' (brute, hungarian or auto)");
}

py::dict verdict_dict(const ErdosVerdict& v) {
  py::dict d;
  d["erdos"] = v.erdos;
  d["frob_sq"] = v.frob_sq;
  d["delta"] = v.delta;
  d["maxtr"] = v.certificate.value;
  d["witnesses"] = images_of(v.certificate.witnesses);
  return d;
}

py::list terms_list(const ConvexDecomposition& d) {
  py::list out;
  for (const auto& t : d.terms) out.append(py::make_tuple(t.coef, t.perm.one_based()));
  return out;
}

py::dict class_dict(const ErdosClass& c) {
  py::dict d;
  d["matrix"] = to_rows(c.canonical.matrix());
  d["support"] = images_of(c.support);
  d["weights"] = c.weights;
  d["value"] = c.common_value;
  d["frob_sq"] = c.frob_sq;
  d["sources"] = c.sources;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic core for Erdos matrices";

  static py::exception<Error> base(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<DimensionError>(m, "DimensionError", base);
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", base);
  py::register_exception<ArithmeticError>(m, "ArithmeticError", base);
  py::register_exception<RangeError>(m, "RangeError", base);
  py::register_exception<NotBistochasticError>(m, "NotBistochasticError", base);
  py::register_exception<ReductionError>(m, "ReductionError", base);
  py::register_exception<DependentSetError>(m, "DependentSetError", base);
  py::register_exception<InternalError>(m, "InternalError", base);

  py::class_<Surd>(m, "Surd", "Exact a + b*sqrt(d).")
      .def(py::init([](const Rational& a, const Rational& b, const py::int_& d) {
             return Surd(a, b, BigInt(py::str(d).cast<std::string>()));
           }),
           py::arg("a"), py::arg("b") = Rational(0), py::arg("d") = py::int_(0))
      .def_property_readonly("a", &Surd::a)
      .def_property_readonly("b", &Surd::b)
      .def_property_readonly("d", [](const Surd& s) { return py::int_(py::str(s.d().get_str())); })
      .def("is_rational", &Surd::is_rational)
      .def("__float__", &Surd::to_double)
      .def("__str__", &Surd::str)
      .def("__repr__", [](const Surd& s) { return "Surd(" + s.str() + ")"; })
      .def("__eq__", [](const Surd& x, const Surd& y) { return x == y; })
      .def("__lt__", [](const Surd& x, const Surd& y) { return x < y; })
      .def("__hash__", [](const Surd& s) { return py::hash(py::str(s.str())); });
  py::implicitly_convertible<py::int_, Surd>();

  m.def("parse_matrix", [](const std::string& text) { return to_rows(parse_matrix(text)); }, py::arg("text"));

  m.def(
      "maxtr",
      [](const Rows& a, const std::string& method) {
        const auto c = maxtr(RationalMatrix::from_rows(a), method_from(method));
        return py::make_tuple(c.value, images_of(c.witnesses));
      },
      py::arg("matrix"), py::arg("method") = "auto",
      "(maxTr(A), witnesses). Brute force lists every maximiser; hungarian returns one.");
  m.def("frob_sq", [](const Rows& a) { return frob_sq(bistochastic(a)); }, py::arg("matrix"));
  m.def(
      "delta", [](const Rows& a, const std::string& method) { return delta(bistochastic(a), method_from(method)); },
      py::arg("matrix"), py::arg("method") = "auto");
  m.def(
      "is_erdos",
      [](const Rows& a, const std::string& method) { return verdict_dict(is_erdos(bistochastic(a), method_from(method))); },
      py::arg("matrix"), py::arg("method") = "auto");
  m.def("max_delta_matrix", [](int n) { return to_rows(max_delta_matrix(n).matrix()); }, py::arg("n"));

  m.def(
      "decompose",
      [](const Rows& a, const std::string& reduce) {
        auto d = decompose(bistochastic(a));
        if (reduce == "affine") {
          d = reduce_affine(std::move(d));
        } else if (reduce == "linear") {
          d = reduce_linear(std::move(d));
        } else if (reduce != "none") {
          throw RangeError("unknown reduction '" + reduce + "' (none, affine or linear)");
        }
        return terms_list(d);
      },
      py::arg("matrix"), py::arg("reduce") = "none", "List of (coef, perm) with 1-based perms.");
  m.def(
      "canonical_form", [](const Rows& a) { return to_rows(canonical_form(bistochastic(a)).matrix()); },
      py::arg("matrix"));

  m.def(
      "build_gram",
      [](const std::vector<Images>& perms) {
        const auto g = build_gram(perms_from(perms));
        std::vector<std::vector<long>> rows(g.m(), std::vector<long>(g.m()));
        for (std::size_t i = 0; i < g.m(); ++i)
          for (std::size_t j = 0; j < g.m(); ++j) rows[i][j] = g.gram(i, j);
        return rows;
      },
      py::arg("perms"));
  m.def(
      "solve_candidate",
      [](const std::vector<Images>& perms) {
        const auto s = solve_candidate(build_gram(perms_from(perms)));
        return py::make_tuple(s.x, s.common_value);
      },
      py::arg("perms"), "(x, <Mx, x>) for a linearly independent set.");
  m.def(
      "pipeline",
      [](const std::vector<Images>& perms) {
        const auto out = pipeline(perms_from(perms));
        py::dict d;
        d["accepted"] = out.accepted();
        d["rejection"] = out.rejection ? py::cast(to_string(*out.rejection)) : py::none();
        if (out.solution) {
          d["x"] = out.solution->x;
          d["value"] = out.solution->common_value;
        }
        if (out.matrix) d["matrix"] = to_rows(out.matrix->matrix());
        return d;
      },
      py::arg("perms"));

  m.def(
      "half_identity_family",
      [](int n) {
        std::vector<Rows> out;
        for (const auto& a : half_identity_family(n)) out.push_back(to_rows(a.matrix()));
        return out;
      },
      py::arg("n"));
  m.def(
      "count_bound",
      [](int n) {
        const auto b = count_bound(n);
        return py::make_tuple(py::int_(py::str(b.total.get_str())), py::int_(py::str(b.equivalence.get_str())));
      },
      py::arg("n"), "(total, equivalence) upper bounds.");

  m.def("omega2", &omega2, py::arg("alpha"));
  m.def("delta2_of_p", &delta2_of_p, py::arg("p"));

  m.def(
      "enumerate",
      [](int n, int max_support, std::optional<double> budget_seconds, int workers) {
        EnumerationOptions options;
        options.n = n;
        options.max_support = max_support;
        options.workers = workers;
        if (budget_seconds) options.budget = std::chrono::milliseconds(static_cast<long long>(*budget_seconds * 1000));
        EnumerationReport report;
        {
          py::gil_scoped_release release;
          report = enumerate_erdos(options);
        }
        py::list classes;
        for (const auto& c : report.classes) classes.append(class_dict(c));
        py::dict d;
        d["n"] = report.n;
        d["classes"] = classes;
        d["complete"] = report.complete;
        d["sets_visited"] = report.sets_visited;
        d["elapsed_ms"] = report.elapsed.count();
        return d;
      },
      py::arg("n"), py::arg("max_support") = 0, py::arg("budget_seconds") = py::none(), py::arg("workers") = 1);
}

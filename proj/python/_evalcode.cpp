#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "evalcode/codes.hpp"
#include "evalcode/error.hpp"
#include "evalcode/formulas.hpp"
#include "evalcode/io.hpp"
#include "evalcode/parallel.hpp"
#include "evalcode/parse.hpp"
#include "evalcode/repro.hpp"
#include "evalcode/variety.hpp"
#include "evalcode/weights.hpp"

namespace py = pybind11;
using namespace evalcode;

namespace {

using Coord = std::variant<std::int64_t, std::string>;
// pybind11 holders cannot point to const.
using PyField = std::shared_ptr<FiniteField>;

PyField unconst(const FieldPtr& k) { return std::const_pointer_cast<FiniteField>(k); }

PointSet make_points(const PyField& k, std::size_t s, const std::vector<std::vector<Coord>>& pts, bool projective) {
  std::vector<std::vector<Elem>> coords;
  for (const auto& p : pts) {
    auto& row = coords.emplace_back();
    for (const auto& c : p) {
      row.push_back(std::holds_alternative<std::int64_t>(c) ? k->from_int(std::get<std::int64_t>(c))
                                                             : parse_element(std::get<std::string>(c), *k));
    }
  }
  return PointSet(k, s, coords, projective);
}

std::vector<std::string> formatted(std::span<const Polynomial> polys, const MonomialOrder& order,
                                   const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(format_polynomial(f, order, names));
  return out;
}

std::vector<std::vector<std::string>> matrix_literals(const EvaluationCode& c) {
  const Matrix& g = c.generator_matrix();
  std::vector<std::vector<std::string>> rows(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) rows[i].push_back(format_element(*c.field(), g(i, j)));
  }
  return rows;
}

SearchOptions options(std::uint64_t budget, std::uint64_t verify_every, bool footprint) {
  SearchOptions o;
  o.budget = budget;
  o.verify_every = verify_every;
  o.with_footprint = footprint;
  return o;
}

std::string report_json(const EvaluationCode& c, const WeightReport& w) {
  return to_json(w, c.order(), c.variable_names()).dump();
}

}  // namespace

PYBIND11_MODULE(_evalcode, m) {
  m.doc() = "Evaluation codes over finite fields";

  // Later registrations are tried first, so the base class goes first.
  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

  py::class_<FiniteField, PyField>(m, "Field")
      .def_property_readonly("order", &FiniteField::order)
      .def_property_readonly("characteristic", &FiniteField::characteristic)
      .def_property_readonly("degree", &FiniteField::degree)
      .def("elements", [](const FiniteField& k) {
        std::vector<std::string> out;
        for (std::uint32_t x = 0; x < k.order(); ++x) out.push_back(format_element(k, x));
        return out;
      })
      .def("__repr__", [](const FiniteField& k) { return "Field(" + std::to_string(k.order()) + ")"; });
  m.def("field", [](std::uint64_t q, const std::string& modulus) { return unconst(make_field(q, modulus)); }, py::arg("q"),
        py::arg("modulus") = "");

  py::class_<PointSet>(m, "PointSet")
      .def(py::init(&make_points), py::arg("field"), py::arg("s"), py::arg("points"), py::arg("projective") = false)
      .def_property_readonly("field", [](const PointSet& X) { return unconst(X.field()); })
      .def_property_readonly("dimension", &PointSet::dimension)
      .def_property_readonly("projective", &PointSet::is_projective)
      .def("__len__", &PointSet::size)
      .def("points", [](const PointSet& X) {
        std::vector<std::vector<std::string>> out;
        for (std::size_t i = 0; i < X.size(); ++i) {
          auto& row = out.emplace_back();
          for (const Elem c : X[i]) row.push_back(format_element(*X.field(), c));
        }
        return out;
      })
      .def("to_text", &write_point_file);
  m.def("torus", [](const PyField& k, std::size_t s) { return torus(k, s); });
  m.def("affine_space", [](const PyField& k, std::size_t s) { return affine_space(k, s); });
  m.def("read_point_file", py::overload_cast<const std::string&>(&read_point_file), py::arg("path"));
  m.def(
      "variety_points",
      [](const PyField& k, std::size_t s, const std::string& system, const std::vector<std::string>& vars,
         bool projective) {
        const auto G = parse_polynomial_list(system, k, s, vars);
        PointSet X = projective ? projective_variety_points(G, k, s) : affine_variety_points(G, k, s);
        if (!vars.empty()) X.set_variable_names(vars);
        return X;
      },
      py::arg("field"), py::arg("s"), py::arg("system"), py::arg("vars") = std::vector<std::string>{},
      py::arg("projective") = false);

  m.def(
      "vanishing_ideal",
      [](const PointSet& X, const std::string& order) {
        const GroebnerBasis gb = vanishing_ideal(X, MonomialOrder::parse(order));
        return formatted(gb.generators(), gb.order(), X.variable_names());
      },
      py::arg("points"), py::arg("order") = "grevlex");

  py::class_<EvaluationCode>(m, "Code")
      .def_property_readonly("length", &EvaluationCode::length)
      .def_property_readonly("dimension", &EvaluationCode::dimension)
      .def_property_readonly("order", [](const EvaluationCode& c) { return c.order().name(); })
      .def_property_readonly("basis",
                             [](const EvaluationCode& c) { return formatted(c.basis(), c.order(), c.variable_names()); })
      .def_property_readonly("points", &EvaluationCode::points)
      .def("generator_matrix", &matrix_literals)
      .def("tsv", [](const EvaluationCode& c) { return generator_tsv(c); })
      .def("_metadata", [](const EvaluationCode& c) { return code_metadata(c).dump(); });

  m.def(
      "evaluation_code",
      [](const PointSet& X, const std::string& basis, const std::string& order) {
        return evaluation_code(X, parse_polynomial_list(basis, X.field(), X.dimension(), X.variable_names()),
                               MonomialOrder::parse(order));
      },
      py::arg("points"), py::arg("basis"), py::arg("order") = "grevlex");
  m.def(
      "rm_code", [](const PointSet& X, int d, const std::string& order) { return rm_code(X, d, MonomialOrder::parse(order)); },
      py::arg("points"), py::arg("d"), py::arg("order") = "grevlex");
  m.def("projective_rm_code", [](const PointSet& X, int d) { return projective_rm_code(X, d); });
  m.def("toric_code", [](std::uint32_t q, std::size_t s, int d) { return toric_hypersimplex_code(q, s, d); });
  m.def("squarefree_code", [](std::uint32_t q, std::size_t s, int d) { return squarefree_code(q, s, d); });

  m.def(
      "_ghw",
      [](const EvaluationCode& c, std::size_t r, std::uint64_t budget, std::uint64_t verify, bool fp) {
        py::gil_scoped_release release;
        return report_json(c, ghw(c, r, options(budget, verify, fp)));
      },
      py::arg("code"), py::arg("r"), py::arg("budget") = kDefaultBudget, py::arg("verify_every") = 0,
      py::arg("footprint") = true);
  m.def(
      "ghw_bruteforce",
      [](const EvaluationCode& c, std::size_t r, std::uint64_t budget) {
        py::gil_scoped_release release;
        return ghw_bruteforce(c, r, budget);
      },
      py::arg("code"), py::arg("r"), py::arg("budget") = kDefaultBudget);
  m.def(
      "_min_distance_recursive",
      [](const PointSet& X, int d, std::uint64_t budget) {
        py::gil_scoped_release release;
        const WeightReport w = min_distance_recursive(X, d, MonomialOrder{}, options(budget, 0, true));
        return to_json(w, MonomialOrder{}, X.variable_names()).dump();
      },
      py::arg("points"), py::arg("d"), py::arg("budget") = kDefaultBudget);
  m.def("footprint_bound",
        [](const EvaluationCode& c, std::size_t r, std::uint64_t budget) { return footprint_bound(c, r, budget); },
        py::arg("code"), py::arg("r"), py::arg("budget") = kDefaultBudget);
  m.def("rm_footprint", [](const PointSet& X, int d, std::size_t r) { return rm_footprint(X, d, r); },
        py::arg("points"), py::arg("d"), py::arg("r"));
  m.def("squarefree_footprint",
        [](std::uint32_t q, std::size_t s, int d, std::size_t r) { return squarefree_footprint(q, s, d, r); },
        py::arg("q"), py::arg("s"), py::arg("d"), py::arg("r"));

  m.def("toric_min_distance", &toric_min_distance_formula, py::arg("q"), py::arg("s"), py::arg("d"));
  m.def("squarefree_min_distance", &squarefree_min_distance_formula, py::arg("q"), py::arg("s"), py::arg("d"));
  m.def("squarefree_delta2", &squarefree_delta2_formula, py::arg("q"), py::arg("s"), py::arg("d"));

  m.def("set_threads", &set_thread_count, py::arg("n"));
  m.def("repro_ids", &repro_ids);
  m.def(
      "_repro",
      [](const std::string& id) {
        const ReproResult r = run_repro(id);
        py::list checks;
        for (const auto& c : r.checks) {
          checks.append(py::dict(py::arg("name") = c.name, py::arg("expected") = c.expected,
                                 py::arg("actual") = c.actual, py::arg("pass") = c.pass));
        }
        return py::dict(py::arg("id") = r.id, py::arg("title") = r.title, py::arg("checks") = checks,
                        py::arg("seconds") = r.seconds, py::arg("pass") = r.pass());
      },
      py::arg("id"));
}

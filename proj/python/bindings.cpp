#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "catalan/bounds.hpp"
#include "catalan/numbers.hpp"
#include "catalan/sequence.hpp"
#include "catalan/series.hpp"
#include "catalan/singularity.hpp"

namespace py = pybind11;

namespace {

py::object to_py_int(const catalan::BigInt& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py_fraction(const catalan::BigRat& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(catalan::BigInt(q.get_num())),
                    to_py_int(catalan::BigInt(q.get_den())));
}

// Accepts int, str ("p/q") and fractions.Fraction; floats are rejected by
// the exact parser on purpose.
catalan::BigRat to_rational(py::handle obj) {
    return catalan::parse_rational(py::str(obj).cast<std::string>());
}

std::vector<catalan::BigRat> to_rational_vector(py::sequence seq) {
    std::vector<catalan::BigRat> out;
    out.reserve(py::len(seq));
    for (py::handle item : seq) out.push_back(to_rational(item));
    return out;
}

catalan::ImplicitQuadratic make_curve(py::sequence a, py::sequence b, py::sequence c) {
    return catalan::ImplicitQuadratic(catalan::PolynomialZ(to_rational_vector(a)),
                                      catalan::PolynomialZ(to_rational_vector(b)),
                                      catalan::PolynomialZ(to_rational_vector(c)));
}

py::list table_to_list(const catalan::CatalanTable& table) {
    py::list out;
    for (const auto& v : table.values) out.append(to_py_int(v));
    return out;
}

py::list series_to_list(const catalan::TruncatedSeries& s) {
    py::list out;
    for (const auto& q : s.coeffs()) out.append(to_py_fraction(q));
    return out;
}

py::dict residual_to_dict(const catalan::SeriesResidual& r) {
    py::dict d;
    d["is_zero"] = r.is_zero();
    d["first_failing_index"] =
        r.first_failing_index ? py::cast(*r.first_failing_index) : py::none();
    d["max_abs_coeff"] = to_py_fraction(r.max_abs_coeff);
    return d;
}

py::dict report_to_dict(const catalan::BoundReport& r) {
    py::dict d;
    d["name"] = std::string(catalan::bound_name_string(r.bound_name));
    d["checked_up_to"] = r.checked_up_to;
    d["holds"] = r.holds;
    d["first_violation"] =
        r.first_violation ? py::cast(*r.first_violation) : py::none();
    if (r.constant_A) d["constant_A"] = to_py_fraction(*r.constant_A);
    if (r.displayed_step_valid_up_to) {
        d["displayed_step_valid_up_to"] = *r.displayed_step_valid_up_to;
    }
    return d;
}

catalan::GeneratorMethod parse_method(const std::string& name) {
    auto m = catalan::method_from_name(name);
    if (!m) {
        throw std::invalid_argument("unknown method \"" + name +
                                    "\"; expected closed, segner, touchard or product");
    }
    return *m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Catalan-number generators, truncated-series identities, "
              "growth-bound verifiers and singularity location.";

    m.def("closed_form",
          [](std::size_t n) { return to_py_int(catalan::closed_form(n)); },
          py::arg("n"), "C_n = binom(2n, n) / (n + 1), exact.");

    m.def("catalan_table",
          [](const std::string& method, std::size_t n_max) {
              return table_to_list(catalan::table_for(parse_method(method), n_max));
          },
          py::arg("method"), py::arg("n_max"),
          "C_0..C_n by 'closed', 'segner', 'touchard' or 'product'.");

    m.def("even_binomial_sum",
          [](std::size_t n) { return to_py_int(catalan::even_binomial_sum(n)); },
          py::arg("n"), "sum of binom(n, 2k) over k; equals 2^(n-1) for n >= 1.");

    m.def("cross_validate",
          [](std::size_t n_max) {
              auto r = catalan::cross_validate(n_max);
              py::dict d;
              d["n_max"] = r.n_max;
              d["all_agree"] = r.all_agree();
              d["first_disagreement"] =
                  r.first_disagreement ? py::cast(*r.first_disagreement) : py::none();
              return d;
          },
          py::arg("n_max"));

    m.def("fixed_point_series",
          [](std::size_t order) {
              return series_to_list(catalan::fixed_point_series(order));
          },
          py::arg("order"), "Coefficients of the unique series with w = 1 + x w^2.");

    m.def("sqrt_formula_series",
          [](std::size_t order) {
              return series_to_list(catalan::sqrt_formula_series(order));
          },
          py::arg("order"), "Coefficients of (1 - sqrt(1 - 4x)) / (2x).");

    m.def("functional_equation_residual",
          [](std::size_t order) {
              return residual_to_dict(catalan::functional_equation_residual(
                  catalan::fixed_point_series(order)));
          },
          py::arg("order"));

    m.def("verify_touchard_derivation",
          [](std::size_t order, std::size_t term_cutoff) {
              return residual_to_dict(
                  catalan::verify_touchard_derivation(order, term_cutoff));
          },
          py::arg("order"), py::arg("term_cutoff"));

    m.def("verify_upper_bound_induction",
          [](py::handle constant, std::size_t n_max) {
              return report_to_dict(
                  catalan::verify_upper_bound_induction(to_rational(constant), n_max));
          },
          py::arg("constant"), py::arg("n_max"));

    m.def("minimal_inductive_constant",
          []() { return to_py_fraction(catalan::minimal_inductive_constant()); });

    m.def("verify_segner_upper_bound",
          [](std::size_t n_max) {
              return report_to_dict(catalan::verify_segner_upper_bound(n_max));
          },
          py::arg("n_max"));

    m.def("verify_lower_central_binomial",
          [](std::size_t n_max) {
              return report_to_dict(catalan::verify_lower_central_binomial(n_max));
          },
          py::arg("n_max"));

    m.def("verify_lower_touchard",
          [](std::size_t n_max) {
              return report_to_dict(catalan::verify_lower_touchard(n_max));
          },
          py::arg("n_max"));

    m.def("root_test", &catalan::root_test, py::arg("n"),
          "C_n^(1/n) via the big-integer logarithm.");

    m.def("ratio_test",
          [](std::size_t n) { return to_py_fraction(catalan::ratio_test_exact(n)); },
          py::arg("n"), "C_{n+1} / C_n as an exact Fraction.");

    m.def("asymptotic_ratio", &catalan::asymptotic_ratio, py::arg("n"),
          "C_n n^(3/2) sqrt(pi) / 4^n; approaches 1 from below.");

    m.def("radius_estimate",
          [](std::size_t n) {
              auto est = catalan::radius_estimate(n);
              py::dict d;
              d["n_used"] = est.n_used;
              d["root_test"] = est.root_test_value;
              d["ratio_test"] = to_py_fraction(est.ratio_test_value);
              d["radius_point_estimate"] = to_py_fraction(est.radius_point_estimate);
              d["touchard_only_bracket"] =
                  py::make_tuple(to_py_fraction(est.touchard_only_bracket.first),
                                 to_py_fraction(est.touchard_only_bracket.second));
              d["asymptotic_ratio"] = est.asymptotic_ratio_value;
              return d;
          },
          py::arg("n"));

    m.def("evaluate_curve",
          [](py::sequence a, py::sequence b, py::sequence c, py::handle z,
             py::handle w) {
              return to_py_fraction(
                  catalan::evaluate(make_curve(a, b, c), to_rational(z), to_rational(w)));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"), py::arg("w"));

    m.def("regular_point_check",
          [](py::sequence a, py::sequence b, py::sequence c, py::handle z,
             py::handle w) {
              return catalan::regular_point_check(make_curve(a, b, c), to_rational(z),
                                                  to_rational(w));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"), py::arg("w"));

    m.def("discriminant",
          [](py::sequence a, py::sequence b, py::sequence c) {
              catalan::PolynomialZ disc = catalan::discriminant(make_curve(a, b, c));
              py::list out;
              for (const auto& q : disc.coeffs()) out.append(to_py_fraction(q));
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("c"),
          "Coefficients of b^2 - 4ac, constant first.");

    m.def("rational_roots",
          [](py::sequence coeffs) {
              auto roots =
                  catalan::rational_roots(catalan::PolynomialZ(to_rational_vector(coeffs)));
              py::list out;
              for (const auto& r : roots) out.append(to_py_fraction(r));
              return out;
          },
          py::arg("coeffs"), "All rational roots, sorted by modulus.");

    m.def("locate_singularity",
          [](py::sequence a, py::sequence b, py::sequence c) {
              auto result = catalan::locate_singularity(make_curve(a, b, c));
              py::dict d;
              d["found_rational"] = result.found_rational();
              if (result.point) {
                  d["z_star"] = to_py_fraction(result.point->z_star);
                  d["w_star"] = to_py_fraction(result.point->w_star);
              } else {
                  d["z_star"] = py::none();
                  d["w_star"] = py::none();
                  if (result.non_rational) {
                      d["non_rational_interval"] =
                          py::make_tuple(to_py_fraction(result.non_rational->lo),
                                         to_py_fraction(result.non_rational->hi));
                  }
              }
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("c"));

#ifdef CATALAN_VERSION
    m.attr("__version__") = CATALAN_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}

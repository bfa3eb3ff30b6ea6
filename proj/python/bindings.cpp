#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qgolden/combinatorics.hpp"
#include "qgolden/compositions.hpp"
#include "qgolden/golden.hpp"
#include "qgolden/poly.hpp"
#include "qgolden/qfib.hpp"
#include "qgolden/report.hpp"
#include "qgolden/series.hpp"
#include "qgolden/sw.hpp"

namespace py = pybind11;

namespace {

// Exact transfer: GMP integer -> arbitrary-precision Python int.
py::int_ to_py_int(const qgolden::BigInt& value)
{
    PyObject* obj = PyLong_FromString(value.get_str().c_str(), nullptr, 10);
    if (obj == nullptr)
        throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list to_py_coeffs(const std::vector<qgolden::BigInt>& coeffs)
{
    py::list out;
    for (const qgolden::BigInt& c : coeffs)
        out.append(to_py_int(c));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact q-Fibonacci polynomials, the q-golden ratio series, and "
              "verifiers for the identities relating them to Catalan numbers";

    py::class_<qgolden::VerificationReport>(m, "VerificationReport")
        .def_readonly("check", &qgolden::VerificationReport::check)
        .def_property_readonly("parameters",
                               [](const qgolden::VerificationReport& rep) {
                                   py::dict d;
                                   for (const auto& [name, value] : rep.parameters)
                                       d[py::str(name)] = value;
                                   return d;
                               })
        .def_readonly("lhs", &qgolden::VerificationReport::lhs)
        .def_readonly("rhs", &qgolden::VerificationReport::rhs)
        .def_readonly("passed", &qgolden::VerificationReport::passed)
        .def_readonly("detail", &qgolden::VerificationReport::detail)
        .def("summary", &qgolden::VerificationReport::summary)
        .def("__bool__",
             [](const qgolden::VerificationReport& rep) { return rep.passed; })
        .def("__repr__", [](const qgolden::VerificationReport& rep) {
            return "<VerificationReport " + rep.summary() + ">";
        });

    m.def("binomial",
          [](long a, long b) { return to_py_int(qgolden::binomial(a, b)); },
          py::arg("a"), py::arg("b"),
          "binom(a, b); 0 when b < 0 or b > a");
    m.def("catalan",
          [](long k) { return to_py_int(qgolden::catalan(k)); }, py::arg("k"),
          "Catalan number C_k from the convolution recurrence");
    m.def("catalan_closed",
          [](long k) { return to_py_int(qgolden::catalan_closed(k)); },
          py::arg("k"), "C_k as binom(2k, k)/(k+1)");
    m.def("fibonacci",
          [](long n) { return to_py_int(qgolden::fibonacci(n)); }, py::arg("n"),
          "Fibonacci number with F_0 = F_1 = 1");

    m.def("qfib_recursive",
          [](long n) { return to_py_coeffs(qgolden::qfib_recursive(n).coeffs); },
          py::arg("n"),
          "Coefficients of F_n(q), low degree first, from the recurrence "
          "F_n = F_{n-1} + q F_{n-2}");
    m.def("qfib_closed",
          [](long n) { return to_py_coeffs(qgolden::qfib_closed(n).coeffs); },
          py::arg("n"),
          "Coefficients of F_n(q) from the binomial closed form");
    m.def("qfib_at_one",
          [](long n) { return to_py_int(qgolden::qfib_at_one(n)); }, py::arg("n"),
          "F_n(1), the coefficient sum of the closed form");

    m.def("phi_series",
          [](long order) { return to_py_coeffs(qgolden::phi_series(order).coeffs); },
          py::arg("order"),
          "Coefficients of phi(q) = (1 + sqrt(1+4q))/2 through q^(order-1)");
    m.def("phi_reciprocal_series",
          [](long order) {
              return to_py_coeffs(qgolden::phi_reciprocal_series(order).coeffs);
          },
          py::arg("order"),
          "Coefficients of 1/phi(q): the signed Catalan numbers");
    m.def("ratio_series",
          [](long n, long order) {
              return to_py_coeffs(qgolden::ratio_series(n, order).coeffs);
          },
          py::arg("n"), py::arg("order"),
          "Coefficients of F_{n+1}(q)/F_n(q) mod q^order");
    m.def("golden_ratio_numeric", &qgolden::golden_ratio_numeric, py::arg("n"),
          py::arg("frac_digits") = 20,
          "fibonacci(n+1)/fibonacci(n) as a fixed-point decimal string");

    m.def("check_theorem", &qgolden::check_theorem, py::arg("n"),
          "F_{n+1}/F_n == phi(q) through q^n");
    m.def("check_reciprocal_form", &qgolden::check_reciprocal_form, py::arg("n"),
          "F_n/F_{n+1} == 1/phi(q) through q^n");

    m.def("compositions",
          [](long m) {
              py::list out;
              for (const qgolden::Composition& c : qgolden::CompositionRange(m))
                  out.append(py::tuple(py::cast(c.parts)));
              return out;
          },
          py::arg("m"),
          "All 2^(m-1) compositions of m as tuples, in lexicographic order");
    m.def("composition_count",
          [](long m) { return to_py_int(qgolden::composition_count(m)); },
          py::arg("m"));

    m.def("sw_lhs",
          [](long n, long m) { return to_py_int(qgolden::sw_lhs(n, m)); },
          py::arg("n"), py::arg("m"),
          "Alternating composition sum of binomial products");
    m.def("sw_rhs", [](long m) { return to_py_int(qgolden::sw_rhs(m)); },
          py::arg("m"), "(-1)^m C_{m-1}");
    m.def("sw_gf_coefficient",
          [](long n, long m) { return to_py_int(qgolden::sw_gf_coefficient(n, m)); },
          py::arg("n"), py::arg("m"),
          "Coefficient of q^m in -q F_{n-1}(q)/F_n(q) by series division");
    m.def("sw_geometric",
          [](long n, long m) { return to_py_int(qgolden::sw_geometric(n, m)); },
          py::arg("n"), py::arg("m"),
          "Same coefficient by the truncated geometric expansion");
    m.def("check_sw", &qgolden::check_sw, py::arg("n"), py::arg("m"),
          "All four routes agree (requires m <= n)");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}

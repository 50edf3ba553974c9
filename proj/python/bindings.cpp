#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdissect/lattice.hpp"
#include "qdissect/product.hpp"
#include "qdissect/report.hpp"
#include "qdissect/scan.hpp"
#include "qdissect/spec_parser.hpp"
#include "qdissect/theta.hpp"
#include "qdissect/verifier.hpp"

namespace py = pybind11;
using namespace qdissect;

namespace {

/// Series as {"lo", "order", "coeffs": [(e, int), ...]} with exact Python ints.
py::dict series_dict(const Series &s)
{
    py::object to_int = py::module_::import("builtins").attr("int");
    py::list coeffs;
    for (const auto &[e, c] : s.terms()) {
        coeffs.append(py::make_tuple(e, to_int(c.get_str())));
    }
    py::dict out;
    out["lo"] = s.lo();
    out["order"] = s.order();
    out["coeffs"] = coeffs;
    return out;
}

py::object json_value(const Json &j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

Claim make_claim(const std::string &spec, std::int64_t t, std::int64_t r)
{
    return Claim{"python", parse_spec(spec), t, r, "python", {}};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact q-series expansion, dissection and vanishing-coefficient certification";

    py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);

    m.def("normalize_spec", [](const std::string &spec) { return to_string(parse_spec(spec)); },
          py::arg("spec"), "Parse a product spec and print it back in canonical surface syntax.");
    m.def("expand", [](const std::string &spec, Exponent order) { return series_dict(product_expand(parse_spec(spec), order)); },
          py::arg("spec"), py::arg("order") = 1000);
    m.def("theta_series",
          [](std::int64_t a, std::int64_t b, int sign_a, int sign_b, Exponent order) {
              return series_dict(theta_series(ThetaSpec{q_pow(a, sign_a), q_pow(b, sign_b)}, order));
          },
          py::arg("a"), py::arg("b"), py::arg("sign_a") = 1, py::arg("sign_b") = 1, py::arg("order") = 100,
          "f(sign_a q^a, sign_b q^b) to the given order.");
    m.def("dissect",
          [](const std::string &spec, std::int64_t t, std::int64_t r, Exponent order) {
              return series_dict(dissect(product_expand(parse_spec(spec), order), t, r));
          },
          py::arg("spec"), py::arg("t"), py::arg("r"), py::arg("order") = 1000);
    m.def("verify",
          [](const std::string &spec, std::int64_t t, std::int64_t r, Exponent order) {
              return json_value(to_json(verify_claim(make_claim(spec, t, r), order)));
          },
          py::arg("spec"), py::arg("t"), py::arg("r"), py::arg("order") = 1000);
    m.def("prove",
          [](const std::string &spec, std::int64_t t, std::int64_t r, Exponent order) {
              return json_value(to_json(prove_claim(make_claim(spec, t, r), order)));
          },
          py::arg("spec"), py::arg("t"), py::arg("r"), py::arg("order") = 1000);
    m.def("catalog",
          [](Exponent order, unsigned jobs) {
              std::vector<ProofReport> reports;
              {
                  py::gil_scoped_release release;
                  reports = run_claims(builtin_catalog(), order, jobs);
              }
              return json_value(run_report(reports));
          },
          py::arg("order") = 1000, py::arg("jobs") = 0);
    m.def("catalog_ids", [] {
        std::vector<std::string> ids;
        for (const auto &c : builtin_catalog()) {
            ids.push_back(c.id);
        }
        return ids;
    });
    m.def("scan",
          [](const std::string &family, Exponent order, unsigned jobs) {
              auto tmpl = find_family(family);
              if (!tmpl) {
                  throw py::value_error("unknown family '" + family + "'");
              }
              tmpl->order = order;
              std::vector<Finding> findings;
              {
                  py::gil_scoped_release release;
                  findings = scan(*tmpl, jobs);
              }
              return json_value(scan_report(*tmpl, findings));
          },
          py::arg("family"), py::arg("order") = 500, py::arg("jobs") = 0);
}

// Python bindings for the core counting, series, verification and rendering
// operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "overpath/bijection.hpp"
#include "overpath/budget.hpp"
#include "overpath/gf.hpp"
#include "overpath/lattice_path.hpp"
#include "overpath/overpartition.hpp"
#include "overpath/render.hpp"
#include "overpath/verify.hpp"

namespace py = pybind11;
using namespace overpath;

namespace {

std::vector<long long> series_coeffs(const Series& s) {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(s.trunc()) + 1);
    for (int n = 0; n <= s.trunc(); ++n)
        out.push_back(s[n].convert_to<long long>());
    return out;
}

}  // namespace

PYBIND11_MODULE(_overpath, m) {
    m.doc() = "exact combinatorics for overpartitions and four-step lattice paths";

    m.def(
        "count_overpartitions",
        [](const std::string& family, int k, int a, int n) {
            return count_overpartitions(overpartition_family_from_string(family), k, a, n);
        },
        py::arg("family"), py::arg("k"), py::arg("a"), py::arg("n"),
        "count the overpartition family {B,A,C,D,O,OverO} at (k, a, n)");

    m.def(
        "count_paths",
        [](const std::string& family, int k, int a, int n) {
            return count_paths(path_family_from_string(family), k, a, n);
        },
        py::arg("family"), py::arg("k"), py::arg("a"), py::arg("n"),
        "count the lattice-path family {E,F,H,J,S} at (k, a, n)");

    m.def(
        "gf_sum",
        [](const std::string& identity, int k, int a, int trunc) {
            return series_coeffs(gf_sum(identity_from_string(identity), k, a, trunc));
        },
        py::arg("identity"), py::arg("k"), py::arg("a"), py::arg("trunc"),
        "coefficients 0..trunc of the multi-sum side");

    m.def(
        "gf_prod",
        [](const std::string& identity, int k, int a, int trunc) {
            return series_coeffs(gf_prod(identity_from_string(identity), k, a, trunc));
        },
        py::arg("identity"), py::arg("k"), py::arg("a"), py::arg("trunc"),
        "coefficients 0..trunc of the product side (AB and D only)");

    m.def(
        "verify",
        [](const std::string& theorem, int k, int kmax, int nmax) {
            VerifyBounds b;
            b.k = k;
            b.kmax = kmax;
            b.nmax = nmax;
            return py::module_::import("json").attr("loads")(
                verify_theorem(theorem, b).to_json().dump());
        },
        py::arg("theorem"), py::arg("k") = 0, py::arg("kmax") = 3,
        py::arg("nmax") = 10,
        "cross-check one theorem over a grid; returns the report as a dict");

    m.def(
        "render_ascii",
        [](const std::string& path) {
            return render_ascii(LatticePath::from_text(path));
        },
        py::arg("path"), "ASCII picture of a path given as 'k=K,a=A:letters'");

    m.def(
        "render_svg",
        [](const std::string& path) {
            return render_svg(LatticePath::from_text(path));
        },
        py::arg("path"), "SVG picture of a path given as 'k=K,a=A:letters'");

    m.def(
        "major_index",
        [](const std::string& path) {
            return major_index(LatticePath::from_text(path));
        },
        py::arg("path"));

    m.def("set_node_budget", &set_node_budget, py::arg("nodes"),
          "cap enumeration search nodes (0 = unlimited)");
}

// Python bindings. Structured reports cross the boundary as JSON strings;
// the netforge package parses them into plain dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netforge/equivalence.hpp"
#include "netforge/net.hpp"
#include "netforge/realization.hpp"
#include "netforge/serialization.hpp"

namespace py = pybind11;
using namespace netforge;

namespace {

combinat::LatinSquare square_from_arg(const py::object& obj) {
    if (py::isinstance<combinat::LatinSquare>(obj)) return obj.cast<combinat::LatinSquare>();
    if (py::isinstance<py::str>(obj))
        return combinat::LatinSquare::from_text(obj.cast<std::string>());
    auto rows = obj.cast<std::vector<std::vector<int>>>();
    std::vector<int> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return combinat::LatinSquare::from_grid(static_cast<int>(rows.size()), std::move(flat));
}

}  // namespace

PYBIND11_MODULE(_netforge, m) {
    m.doc() = "orthogonal Latin squares, net equivalence and CP^2 realizability";

    py::class_<combinat::LatinSquare>(m, "LatinSquare")
        .def_static("from_grid", &square_from_arg, py::arg("grid"),
                    "from a nested list of rows, a text block, or another square")
        .def_property_readonly("order", &combinat::LatinSquare::order)
        .def("at", &combinat::LatinSquare::at, py::arg("row"), py::arg("col"),
             "1-based cell access")
        .def("grid",
             [](const combinat::LatinSquare& L) {
                 std::vector<std::vector<int>> rows;
                 for (int r = 1; r <= L.order(); ++r) {
                     std::vector<int> row;
                     for (int c = 1; c <= L.order(); ++c) row.push_back(L.at(r, c));
                     rows.push_back(std::move(row));
                 }
                 return rows;
             })
        .def("to_text", &combinat::LatinSquare::to_text)
        .def("is_reduced", &combinat::LatinSquare::is_reduced)
        .def("transposed", &combinat::LatinSquare::transposed)
        .def("__eq__", [](const combinat::LatinSquare& a,
                          const combinat::LatinSquare& b) { return a == b; })
        .def("__repr__", [](const combinat::LatinSquare& L) {
            return "<LatinSquare order " + std::to_string(L.order()) + ">";
        });

    m.def(
        "cyclic_square",
        [](const std::string& cycles, int k) {
            return combinat::cyclic_square(combinat::Permutation::from_cycles(cycles, k));
        },
        py::arg("cycles"), py::arg("k"),
        "multiplication-table square of the k-cycle given in cycle notation");

    m.def(
        "are_orthogonal",
        [](const py::object& a, const py::object& b) {
            return combinat::are_orthogonal(square_from_arg(a), square_from_arg(b));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "count_latin", [](int k, bool reduced) { return combinat::count_latin(k, reduced); },
        py::arg("k"), py::arg("reduced") = false);

    m.def(
        "transversal_count",
        [](const py::object& L) {
            return combinat::find_transversals(square_from_arg(L)).size();
        },
        py::arg("square"));

    m.def(
        "orthogonal_mates",
        [](const py::object& L, bool reduced) {
            return combinat::orthogonal_mates(square_from_arg(L), reduced);
        },
        py::arg("square"), py::arg("reduced") = true);

    m.def(
        "has_orthogonal_mate",
        [](const py::object& L) { return combinat::has_orthogonal_mate(square_from_arg(L)); },
        py::arg("square"));

    m.def(
        "classify_json",
        [](int k, std::uint64_t budget) {
            return serialization::classification_to_json(equivalence::classify_ols(k, budget))
                .dump();
        },
        py::arg("k"), py::arg("budget") = equivalence::default_budget(),
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "realize_json",
        [](const py::object& a, const py::object& b) {
            combinat::OlsPair p(square_from_arg(a), square_from_arg(b));
            auto v = realization::decide_realizability(p);
            return serialization::verdict_to_json(p.first.order(),
                                                  equivalence::stable_pair_hash(p), v)
                .dump();
        },
        py::arg("first"), py::arg("second"));

    m.def(
        "incidence_json",
        [](const py::object& a, const py::object& b) {
            combinat::OlsPair p(square_from_arg(a), square_from_arg(b));
            return serialization::incidence_to_json(net::ols_to_incidence(p)).dump();
        },
        py::arg("first"), py::arg("second"));

    m.def("hessian_certificate_json", [] {
        return serialization::certificate_to_json(realization::hessian_certificate()).dump();
    });

    m.def(
        "verify_certificate_json",
        [](const std::string& cert, const std::string& incidence) {
            auto m_ = serialization::certificate_from_json(
                serialization::json::parse(cert));
            auto chi =
                serialization::incidence_from_json(serialization::json::parse(incidence));
            std::string witness;
            bool ok = realization::verify_certificate(m_, chi, &witness);
            return py::make_tuple(ok, witness);
        },
        py::arg("certificate_json"), py::arg("incidence_json"));

    m.def("default_budget", &equivalence::default_budget);
}

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "mullineux/analyze.hpp"
#include "mullineux/cores.hpp"
#include "mullineux/fixed_points.hpp"
#include "mullineux/js.hpp"
#include "mullineux/json_io.hpp"
#include "mullineux/signatures.hpp"
#include "mullineux/symbols.hpp"
#include "mullineux/verify.hpp"

namespace py = pybind11;
using namespace mlx;

namespace {

CoreShape core_from_arg(const py::object& core) {
    if (core.is_none()) return CoreShape::empty();
    const auto pair = core.cast<std::pair<int, int>>();
    return CoreShape::rect(pair.first, pair.second);
}

py::object core_to_arg(const CoreShape& shape) {
    if (shape.kind == CoreShape::Kind::Empty) return py::none();
    return py::make_tuple(shape.l, shape.a);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mullineux symbols, residue symbols and Jantzen-Seitz partitions";

    py::class_<Partition>(m, "Partition")
        .def(py::init<>())
        .def(py::init<std::vector<int>>(), py::arg("parts"))
        .def_property_readonly("parts", &Partition::parts)
        .def_property_readonly("n", &Partition::n)
        .def_property_readonly("rows", &Partition::rows)
        .def("conjugate", &Partition::conjugate)
        .def("blocks",
             [](const Partition& self) {
                 std::vector<std::pair<int, int>> out;
                 for (const auto& block : self.blocks())
                     out.emplace_back(block.len, block.mult);
                 return out;
             })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__len__", &Partition::rows)
        .def("__repr__", [](const Partition& self) {
            return "Partition" + self.to_string();
        });

    py::class_<MullineuxSymbol>(m, "MullineuxSymbol")
        .def_property_readonly("top",
                               [](const MullineuxSymbol& self) {
                                   std::vector<int> out;
                                   for (const auto& col : self.columns)
                                       out.push_back(col.a);
                                   return out;
                               })
        .def_property_readonly("bottom",
                               [](const MullineuxSymbol& self) {
                                   std::vector<int> out;
                                   for (const auto& col : self.columns)
                                       out.push_back(col.r);
                                   return out;
                               })
        .def("__len__", &MullineuxSymbol::length)
        .def(py::self == py::self)
        .def("__repr__", [](const MullineuxSymbol& self) {
            return "MullineuxSymbol" + self.to_string();
        });

    py::class_<ResidueSymbol>(m, "ResidueSymbol")
        .def_property_readonly("x",
                               [](const ResidueSymbol& self) {
                                   std::vector<int> out;
                                   for (const auto& col : self.columns)
                                       out.push_back(col.x);
                                   return out;
                               })
        .def_property_readonly("y",
                               [](const ResidueSymbol& self) {
                                   std::vector<int> out;
                                   for (const auto& col : self.columns)
                                       out.push_back(col.y);
                                   return out;
                               })
        .def("__len__", &ResidueSymbol::length)
        .def(py::self == py::self)
        .def("__repr__", [](const ResidueSymbol& self) {
            return "ResidueSymbol" + self.to_string();
        });

    m.def("parse_partition", &parse_partition, py::arg("text"));
    m.def("is_p_regular", &is_p_regular, py::arg("partition"), py::arg("p"));
    m.def("p_regular_partitions", &p_regular_partitions, py::arg("n"), py::arg("p"));
    m.def("content", &content, py::arg("partition"), py::arg("p"));
    m.def("n_vector", &n_vector_of, py::arg("partition"), py::arg("p"));
    m.def("p_core", &p_core, py::arg("partition"), py::arg("p"));
    m.def("weight", &weight, py::arg("partition"), py::arg("p"));
    m.def(
        "removable_nodes",
        [](const Partition& lambda) {
            std::vector<std::pair<int, int>> out;
            for (const auto& node : removable_nodes(lambda))
                out.emplace_back(node.row, node.col);
            return out;
        },
        py::arg("partition"));
    m.def(
        "indent_nodes",
        [](const Partition& lambda) {
            std::vector<std::pair<int, int>> out;
            for (const auto& node : indent_nodes(lambda))
                out.emplace_back(node.row, node.col);
            return out;
        },
        py::arg("partition"));
    m.def(
        "beta",
        [](const Partition& lambda, int i, int j, int p) {
            return mlx::beta(lambda, i, j, p);
        },
        py::arg("partition"), py::arg("i"), py::arg("j"), py::arg("p"));
    m.def(
        "gamma",
        [](const Partition& lambda, int i, int j, int p) {
            return mlx::gamma(lambda, i, j, p);
        },
        py::arg("partition"), py::arg("i"), py::arg("j"), py::arg("p"));

    m.def("mullineux_symbol", &mullineux_symbol, py::arg("partition"), py::arg("p"));
    m.def("partition_of_symbol", &partition_of_symbol, py::arg("symbol"), py::arg("p"));
    m.def("residue_symbol",
          py::overload_cast<const Partition&, int>(&residue_symbol),
          py::arg("partition"), py::arg("p"));
    m.def("mullineux_image", &mullineux_image, py::arg("partition"), py::arg("p"));
    m.def("is_mullineux_fixed", &is_mullineux_fixed, py::arg("partition"), py::arg("p"));

    m.def(
        "node_sequence",
        [](const Partition& lambda, int p) { return to_text(node_sequence(lambda, p)); },
        py::arg("partition"), py::arg("p"));
    m.def(
        "mullineux_sequence",
        [](const Partition& lambda, int p) {
            return to_text(mullineux_sequence(lambda, p));
        },
        py::arg("partition"), py::arg("p"));

    m.def("is_js", &is_js, py::arg("partition"), py::arg("p"));
    m.def("js_type", &js_type, py::arg("partition"), py::arg("p"));
    m.def(
        "js_by_sequence",
        [](const Partition& lambda, int p) -> py::object {
            const auto type = js_by_sequence(lambda, p);
            if (!type) return py::none();
            return py::int_(*type);
        },
        py::arg("partition"), py::arg("p"),
        "type of a JS partition by the sequence criterion, or None");
    m.def("is_fixed_js", &is_fixed_js, py::arg("partition"), py::arg("p"));

    m.def(
        "js_witness",
        [](const py::object& core, int w, int p) {
            return js_witness(core_from_arg(core), w, p);
        },
        py::arg("core"), py::arg("weight"), py::arg("p"),
        "core is None for the empty core or an (l, a) pair");
    m.def(
        "fixed_witness",
        [](int w, const py::object& core, int p) -> py::object {
            const auto witness = fixed_witness(w, core_from_arg(core), p);
            if (!witness) return py::none();
            return py::cast(*witness);
        },
        py::arg("weight"), py::arg("core"), py::arg("p"),
        "core is None for the empty core or a (j, j) pair; None result means "
        "infeasible");

    m.def(
        "js_core_of",
        [](const Partition& lambda, int p) {
            return core_to_arg(js_core_from_length(lambda, p));
        },
        py::arg("partition"), py::arg("p"),
        "core of a JS partition from its length, as None or an (l, a) pair");

    m.def(
        "graph_dot",
        [](int alpha, int p, bool fixed) {
            return to_dot(fixed ? build_fixed_js_graph(p) : build_js_graph(alpha, p));
        },
        py::arg("alpha"), py::arg("p"), py::arg("fixed") = false);
    m.def(
        "graph_json",
        [](int alpha, int p, bool fixed) {
            return to_json(fixed ? build_fixed_js_graph(p) : build_js_graph(alpha, p))
                .dump();
        },
        py::arg("alpha"), py::arg("p"), py::arg("fixed") = false);

    m.def(
        "analyze_json",
        [](const Partition& lambda, int p) {
            return analyze_partition(lambda, p).dump();
        },
        py::arg("partition"), py::arg("p"));

    m.def(
        "verify",
        [](const std::string& suite, const std::vector<int>& ps, int nmax) {
            VerificationReport report;
            if (suite == "roundtrip")
                report = verify_roundtrip(ps, nmax);
            else if (suite == "peaks")
                report = verify_peaks(ps, nmax);
            else if (suite == "js-equiv")
                report = verify_js_equivalence(ps, nmax);
            else if (suite == "construction")
                report = verify_construction(ps, nmax);
            else if (suite == "cores")
                report = verify_core_theorems(ps, nmax);
            else if (suite == "weights")
                report = verify_weight_formula(ps, nmax);
            else if (suite == "fixed")
                report = verify_fixed_points(ps, nmax, 10);
            else
                throw std::invalid_argument("unknown suite: " + suite);
            return py::make_tuple(report.ok(), to_json(report).dump());
        },
        py::arg("suite"), py::arg("ps"), py::arg("nmax"));
}

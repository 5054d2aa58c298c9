#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "purebetti/betti.hpp"
#include "purebetti/constructions.hpp"
#include "purebetti/errors.hpp"
#include "purebetti/io.hpp"
#include "purebetti/isomorphism.hpp"
#include "purebetti/phi.hpp"
#include "purebetti/survey.hpp"

namespace py = pybind11;
using namespace purebetti;

namespace {

using Facets = std::vector<std::vector<std::string>>;

SimplicialComplex make_complex(const Facets& facets, std::optional<std::vector<std::string>> labels) {
    Json j{{"facets", facets}};
    if (labels) j["labels"] = *labels;
    return complex_from_json(j);
}

Facets facet_labels(const SimplicialComplex& d) {
    Facets out;
    for (const Face& f : d.facets()) out.push_back(d.face_labels(f));
    return out;
}

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

FieldSpec field_of(const std::string& s) { return FieldSpec::parse(s); }

py::dict pr_dict(const SimplicialComplex& d, const PrSummary& s) { return to_python(pr_summary_to_json(d, s)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Betti diagrams of Stanley-Reisner ideals, pure resolutions and constructions";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<SimplicialComplex>(m, "Complex")
        .def(py::init(&make_complex), py::arg("facets"), py::arg("labels") = std::nullopt,
             "Complex generated by facet label lists; labels fixes the vertex universe.")
        .def_property_readonly("labels", [](const SimplicialComplex& d) { return d.labeling().labels(); })
        .def_property_readonly("facets", &facet_labels)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def_property_readonly("is_void", &SimplicialComplex::is_void)
        .def("is_pure", &SimplicialComplex::is_pure)
        .def("f_vector", &SimplicialComplex::f_vector)
        .def("to_json", [](const SimplicialComplex& d) { return to_python(complex_to_json(d)); })
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& d) { return "Complex(" + complex_to_json(d).dump() + ")"; });

    py::class_<BettiDiagram>(m, "Diagram")
        .def_property_readonly("n", &BettiDiagram::universe_size)
        .def_property_readonly("entries", [](const BettiDiagram& b) {
            py::dict out;
            for (const auto& [k, v] : b.entries()) out[py::make_tuple(k.first, k.second)] = v;
            return out;
        })
        .def("get", &BettiDiagram::get, py::arg("i"), py::arg("d"))
        .def("render", &BettiDiagram::render)
        .def("render_inline", &BettiDiagram::render_inline)
        .def("is_pure", &diagram_is_pure)
        .def("shift_type", &diagram_shift_type)
        .def("degree_type", &diagram_degree_type)
        .def_static("parse", &BettiDiagram::parse, py::arg("text"), py::arg("n"))
        .def("__eq__", [](const BettiDiagram& a, const BettiDiagram& b) { return a == b; })
        .def("__repr__", [](const BettiDiagram& b) { return "Diagram('" + b.render_inline() + "')"; });

    m.def(
        "reduced_homology",
        [](const SimplicialComplex& d, const std::string& field) { return reduced_homology(d, field_of(field)); },
        py::arg("complex"), py::arg("field") = "q");
    m.def(
        "betti_dual",
        [](const SimplicialComplex& d, const std::string& field, int jobs) { return betti_dual(d, field_of(field), jobs); },
        py::arg("complex"), py::arg("field") = "q", py::arg("jobs") = 1,
        "Betti diagram of the dual ideal from link homology.");
    m.def(
        "betti_direct", [](const SimplicialComplex& d, const std::string& field) { return betti_direct(d, field_of(field)); },
        py::arg("complex"), py::arg("field") = "q", "Betti diagram of the Stanley-Reisner ideal from induced subcomplexes.");
    m.def(
        "is_pr", [](const SimplicialComplex& d, const std::string& field) { return pr_dict(d, is_pr(d, field_of(field))); },
        py::arg("complex"), py::arg("field") = "q");
    m.def(
        "is_cohen_macaulay",
        [](const SimplicialComplex& d, const std::string& field) { return is_cohen_macaulay(d, field_of(field)); },
        py::arg("complex"), py::arg("field") = "q");

    m.def(
        "link", [](const SimplicialComplex& d, const std::vector<std::string>& face) { return link(d, d.face_from_labels(face)); },
        py::arg("complex"), py::arg("face"));
    m.def("alexander_dual", &alexander_dual);
    m.def("skeleton", &skeleton, py::arg("complex"), py::arg("r"));
    m.def("join", &join);
    m.def("canonical_form", &canonical_form);
    m.def("are_isomorphic", &are_isomorphic);
    m.def("barycentric", [](const SimplicialComplex& d) { return barycentric(d).complex; });
    m.def(
        "phi", [](const SimplicialComplex& d, int i, int cap) { return phi(d, i, cap).complex; }, py::arg("complex"),
        py::arg("i"), py::arg("max_universe") = kMaxVertices);
    m.def("build_pr_complex", &build_pr_complex, py::arg("degree_type"), py::arg("vertex_cap") = 64);

    m.def("boundary_simplex", &boundary_simplex, py::arg("p"));
    m.def(
        "intersection_complex", [](const std::vector<int>& mv) { return intersection_complex({mv}); }, py::arg("m"));
    m.def(
        "partition_complex",
        [](int a, int p, int mm, bool closed) { return partition_complex({a, p, mm, closed}); }, py::arg("a"),
        py::arg("p"), py::arg("m"), py::arg("closed") = false);

    m.def(
        "census",
        [](int n, const std::string& filter, const std::string& field, int jobs, bool rays) {
            CensusReport report;
            {
                py::gil_scoped_release release;
                report = census(CensusFilter::parse(filter, n), field_of(field), {jobs, std::nullopt, 2000});
            }
            Json j = census_to_json(report);
            if (rays) {
                std::vector<BettiDiagram> ds;
                for (const auto& [d, c] : report.diagrams) ds.push_back(d);
                j["rays"] = rays_to_json(extremal_rays(ds));
            }
            return to_python(j);
        },
        py::arg("n"), py::arg("filter") = "ideal", py::arg("field") = "q", py::arg("jobs") = 1, py::arg("rays") = false,
        "Census report as a dict, matching the command-line JSON.");
    m.def(
        "extremal_rays", [](const std::vector<BettiDiagram>& ds) { return to_python(rays_to_json(extremal_rays(ds))); },
        py::arg("diagrams"));
    m.def("is_in_cone", &is_in_cone, py::arg("v"), py::arg("generators"));
}

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gentle/classify.hpp"
#include "gentle/generate.hpp"
#include "gentle/invariant.hpp"
#include "gentle/io.hpp"
#include "gentle/repetitive.hpp"
#include "gentle/threads.hpp"

namespace py = pybind11;
using namespace gentle;

namespace {

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::vector<std::string> rendered(const GentlePresentation& p,
                                  const std::vector<Thread>& threads) {
    std::vector<std::string> out;
    out.reserve(threads.size());
    for (const Thread& t : threads) out.push_back(render_thread(p.quiver(), t));
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equivalent: return "equivalent";
        case Verdict::NotEquivalent: return "not_equivalent";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

}  // namespace

PYBIND11_MODULE(pygentle, m) {
    m.doc() = "Derived-equivalence invariants of gentle algebras";

    py::register_exception<Error>(m, "GentleError");

    py::class_<GentlePresentation>(m, "Presentation",
                                   "A validated gentle presentation (quiver plus zero "
                                   "relations).")
        .def_property_readonly(
            "name", [](const GentlePresentation& p) { return p.quiver().name(); })
        .def_property_readonly(
            "vertex_count",
            [](const GentlePresentation& p) { return p.quiver().vertex_count(); })
        .def_property_readonly(
            "arrow_count",
            [](const GentlePresentation& p) { return p.quiver().arrow_count(); })
        .def_property_readonly(
            "relation_count",
            [](const GentlePresentation& p) { return p.relations().size(); })
        .def_property_readonly(
            "cycle_number", [](const GentlePresentation& p) { return p.cycle_number(); })
        .def("__repr__", [](const GentlePresentation& p) {
            return "<Presentation '" + p.quiver().name() + "' (" +
                   std::to_string(p.quiver().vertex_count()) + " vertices, " +
                   std::to_string(p.quiver().arrow_count()) + " arrows, " +
                   std::to_string(p.relations().size()) + " relations)>";
        });

    m.def("parse", &presentation_from_text, py::arg("text"),
          "Build a presentation from the quiver text format.");
    m.def("load", &presentation_from_file, py::arg("path"),
          "Load a presentation from a .quiver or .json file.");
    m.def(
        "render",
        [](const GentlePresentation& p) { return render_quiver_file(to_quiver_file(p)); },
        py::arg("presentation"), "Canonical text form, parseable by parse().");
    m.def(
        "to_json_text",
        [](const GentlePresentation& p) { return to_json(p).dump(2); },
        py::arg("presentation"), "JSON document describing the presentation.");
    m.def("to_dot", &render_dot, py::arg("presentation"),
          "Graphviz digraph with dotted relation edges.");

    m.def(
        "phi", [](const GentlePresentation& p) { return compute_phi(p).phi.pairs; },
        py::arg("presentation"),
        "The derived invariant as a sorted list of (n, m) pairs.");
    m.def(
        "phi_text",
        [](const GentlePresentation& p) { return phi_canonical_text(compute_phi(p).phi); },
        py::arg("presentation"), "The invariant in its canonical text form.");
    m.def(
        "trace_text",
        [](const GentlePresentation& p) {
            PhiResult r = compute_phi(p);
            return render_trace(p.quiver(), r.trace);
        },
        py::arg("presentation"), "Full run protocol of the matching walk.");
    m.def(
        "oracle",
        [](const GentlePresentation& p) { return compute_N(p).pairs; },
        py::arg("presentation"),
        "The same multiset computed from cosyzygy orbits over the repetitive "
        "algebra, independent of the matching walk.");
    m.def(
        "tau_check", [](const GentlePresentation& p) { return tau_check(p); },
        py::arg("presentation"),
        "Whether the squared cosyzygy realizes the translate on one slice.");

    m.def(
        "permitted",
        [](const GentlePresentation& p) { return rendered(p, permitted_threads(p)); },
        py::arg("presentation"), "Permitted threads in canonical order, rendered.");
    m.def(
        "forbidden",
        [](const GentlePresentation& p) { return rendered(p, forbidden_threads(p).threads); },
        py::arg("presentation"), "Forbidden threads in canonical order, rendered.");
    m.def(
        "relation_cycles",
        [](const GentlePresentation& p) {
            std::vector<std::vector<std::string>> out;
            for (const auto& cycle : forbidden_threads(p).cycles) {
                std::vector<std::string> labels;
                labels.reserve(cycle.size());
                for (ArrowId a : cycle) labels.push_back(p.quiver().arrow(a).label);
                out.push_back(std::move(labels));
            }
            return out;
        },
        py::arg("presentation"), "Arrow labels of each pure relation cycle.");

    m.def(
        "classify_text",
        [](const GentlePresentation& p) { return render_normal_form(classify(p)); },
        py::arg("presentation"),
        "Normal form of the derived-equivalence class, e.g. 'A_tilde(2,1)'.");
    m.def(
        "equivalent",
        [](const GentlePresentation& a, const GentlePresentation& b) {
            return verdict_name(derived_equivalent(a, b).verdict);
        },
        py::arg("a"), py::arg("b"),
        "'equivalent', 'not_equivalent' or 'indeterminate'.");

    m.def(
        "an", [](std::uint32_t n) { return build_family(An{n}); }, py::arg("n"),
        "Linear quiver with n vertices and no relations.");
    m.def(
        "a_tilde",
        [](std::uint32_t p, std::uint32_t q) { return build_family(ATilde{p, q}); },
        py::arg("p"), py::arg("q"),
        "Non-oriented cycle made of two directed paths of lengths p >= q >= 1.");
    m.def(
        "lambda_family",
        [](std::uint32_t r, std::uint32_t n, std::uint32_t m) {
            return build_family(Lambda{r, n, m});
        },
        py::arg("r"), py::arg("n"), py::arg("m"),
        "Oriented n-cycle with r consecutive relations and an m-vertex tail.");

    m.def(
        "generate",
        [](std::uint32_t vertices, std::uint32_t cycles, double density,
           std::uint64_t seed) {
            GeneratorParams params;
            params.vertex_count = vertices;
            params.cycle_target = cycles;
            params.relation_density = density;
            params.seed = seed;
            return random_gentle(params);
        },
        py::arg("vertices"), py::arg("cycles") = 1, py::arg("density") = 0.5,
        py::arg("seed") = 1,
        "Sample a random connected gentle presentation, deterministic per seed.");
}

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qps/brackets.hpp"
#include "qps/checks.hpp"
#include "qps/foxcalc.hpp"
#include "qps/tracealg.hpp"
#include "qps/workspace.hpp"

namespace py = pybind11;
using namespace qps;

namespace {

// Python-facing coefficients are "p/q" strings; exactness survives the trip.
py::dict combination_dict(const Alphabet& alph, const LoopCombination& x) {
    py::dict out;
    for (auto& [c, k] : x.terms)
        out[py::str(class_str(alph, c))] = rat_str(k);
    return out;
}

py::dict element_dict(const Alphabet& alph, const AlgebraElement& x) {
    py::dict out;
    for (auto& [w, k] : x.terms)
        out[py::str(word_str(alph, w))] = rat_str(k);
    return out;
}

Rat rat_from_str(const std::string& s) { return parse_rat(s); }

}  // namespace

PYBIND11_MODULE(_qps, m) {
    m.doc() = "exact quasi-Poisson brackets on a combinatorial quasi-surface";

    py::register_exception<ParseError>(m, "QsParseError");
    py::register_exception<NameError>(m, "QsNameError");

    py::class_<QuasiSurface>(m, "QuasiSurface")
        .def(py::init([](int gates, int ygens) {
                 if (gates < 1 || ygens < 0)
                     throw std::invalid_argument("need gates >= 1, ygens >= 0");
                 return QuasiSurface{gates, ygens};
             }),
             py::arg("gates"), py::arg("ygens"))
        .def_readonly("gates", &QuasiSurface::gates)
        .def_readonly("ygens", &QuasiSurface::ygens);

    py::class_<GenericLoop>(m, "GenericLoop");
    py::class_<BasedGenericLoop>(m, "BasedGenericLoop");
    py::class_<FoxDerivative>(m, "FoxDerivative");
    py::class_<RepresentationPoint>(m, "RepresentationPoint")
        .def_readonly("n", &RepresentationPoint::n);

    py::class_<Workspace>(m, "Workspace")
        .def_property_readonly("surface",
                               [](const Workspace& ws) { return ws.surface; })
        .def("loop", &Workspace::loop, py::return_value_policy::reference_internal)
        .def("based_loop", &Workspace::based_loop,
             py::return_value_policy::reference_internal)
        .def("fox", &Workspace::fox, py::return_value_policy::reference_internal)
        .def("rep", &Workspace::rep, py::return_value_policy::reference_internal)
        .def("loop_names", [](const Workspace& ws) {
            std::vector<std::string> names;
            for (auto& [n, v] : ws.loops) names.push_back(n);
            return names;
        });

    m.def("load_workspace", &parse_workspace_file, py::arg("path"));
    m.def("parse_workspace_text", [](const std::string& text) {
        std::istringstream in(text);
        return parse_workspace(in);
    });

    m.def(
        "class_of",
        [](const QuasiSurface& X, const GenericLoop& a) {
            return class_str(X.alphabet(), loop_to_class(X, a));
        },
        py::arg("surface"), py::arg("loop"));
    m.def(
        "loop_of_class",
        [](const QuasiSurface& X, const std::string& text) {
            return class_to_loop(X,
                                 CyclicWord(parse_word(X.alphabet(), text)));
        },
        py::arg("surface"), py::arg("word"));
    m.def(
        "based_word_of",
        [](const QuasiSurface& X, const BasedGenericLoop& a) {
            return word_str(X.alphabet(), based_word(X, a));
        },
        py::arg("surface"), py::arg("based"));

    m.def(
        "bracket",
        [](const QuasiSurface& X, const GenericLoop& a, const GenericLoop& b) {
            return combination_dict(X.alphabet(), bracket2(X, a, b));
        },
        py::arg("surface"), py::arg("a"), py::arg("b"));
    m.def(
        "mu",
        [](const QuasiSurface& X, const std::vector<GenericLoop>& loops,
           int gate) {
            LoopCombination out = gate == 0 ? mu_total(X, loops)
                                            : mu_gate(X, gate, loops);
            return combination_dict(X.alphabet(), out);
        },
        py::arg("surface"), py::arg("loops"), py::arg("gate") = 0);
    m.def(
        "bracket_of_classes",
        [](const QuasiSurface& X, const std::string& a, const std::string& b) {
            Alphabet alph = X.alphabet();
            LoopCombination out = bracket2_linear(
                X,
                LoopCombination::of(CyclicWord(parse_word(alph, a))),
                LoopCombination::of(CyclicWord(parse_word(alph, b))));
            return combination_dict(alph, out);
        },
        py::arg("surface"), py::arg("a"), py::arg("b"));

    m.def(
        "fox_apply",
        [](const QuasiSurface& X, const FoxDerivative& d, const std::string& w) {
            Alphabet alph = X.alphabet();
            return element_dict(alph, fox_apply(d, parse_word(alph, w)));
        },
        py::arg("surface"), py::arg("derivative"), py::arg("word"));
    m.def(
        "fox_delta",
        [](const QuasiSurface& X, const FoxDerivative& d, const std::string& w) {
            Alphabet alph = X.alphabet();
            return element_dict(alph, delta_apply(d, parse_word(alph, w)));
        },
        py::arg("surface"), py::arg("derivative"), py::arg("word"));
    m.def("gate_derivative", &gate_derivative, py::arg("surface"),
          py::arg("gate"));

    m.def(
        "trace_eval",
        [](const QuasiSurface& X, const std::string& poly,
           const RepresentationPoint& rho) {
            return rat_str(
                evaluate(parse_trace_poly(X.alphabet(), poly), rho));
        },
        py::arg("surface"), py::arg("poly"), py::arg("rep"));
    m.def(
        "random_rep",
        [](const QuasiSurface& X, int n, uint64_t seed) {
            return random_representation(n, X.alphabet(), seed);
        },
        py::arg("surface"), py::arg("n"), py::arg("seed"));

    m.def(
        "run_suite",
        [](const std::string& suite, int n, uint64_t seed) {
            if (!known_suite(suite))
                throw std::invalid_argument("unknown suite: " + suite);
            py::list out;
            for (auto& r : run_suite(suite, n, seed)) {
                py::dict d;
                d["check"] = r.name;
                d["instances"] = r.instances;
                d["ok"] = r.ok;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"), py::arg("n") = 25, py::arg("seed") = 1);

    // normalizes a rational string, e.g. "2/4" -> "1/2"
    m.def("rat", [](const std::string& s) { return rat_str(rat_from_str(s)); });
}

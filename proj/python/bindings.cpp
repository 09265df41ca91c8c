#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tlaut/analysis.hpp"
#include "tlaut/constructions.hpp"
#include "tlaut/corpus.hpp"
#include "tlaut/fast.hpp"
#include "tlaut/naive.hpp"
#include "tlaut/tla_format.hpp"

namespace py = pybind11;

namespace {

tlaut::Engine engine_from(const std::string& name) {
    if (name == "auto") return tlaut::Engine::Auto;
    if (name == "fast") return tlaut::Engine::Fast;
    if (name == "naive") return tlaut::Engine::Naive;
    throw py::value_error("engine must be 'auto', 'fast' or 'naive'");
}

}  // namespace

PYBIND11_MODULE(tlaut, m) {
    m.doc() = "Finite automata with translucent letters";

    static py::exception<tlaut::Error> error(m, "TlaError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const tlaut::Error& e) {
            py::set_error(error, (std::string(tlaut::to_string(e.code())) + ": " + e.what()).c_str());
        }
    });

    py::class_<tlaut::Automaton>(m, "Automaton")
        .def_property_readonly("kind", [](const tlaut::Automaton& a) { return std::string(tlaut::to_string(a.kind)); })
        .def_readonly("states", &tlaut::Automaton::states)
        .def_readonly("alphabet", &tlaut::Automaton::alphabet)
        .def_property_readonly("initial",
                               [](const tlaut::Automaton& a) {
                                   std::vector<std::string> names;
                                   for (auto q : a.initial) names.push_back(a.states[q]);
                                   return names;
                               })
        .def("__eq__", [](const tlaut::Automaton& a, const tlaut::Automaton& b) { return a == b; })
        .def("__repr__", [](const tlaut::Automaton& a) {
            return "<Automaton " + std::string(tlaut::to_string(a.kind)) + " with " +
                   std::to_string(a.num_states()) + " states>";
        });

    m.def("parse", &tlaut::parse_tla, py::arg("text"), "Parse TLA text.");
    m.def("load", &tlaut::load_tla_file, py::arg("path"), "Parse a TLA file.");
    m.def("serialize", &tlaut::serialize_tla, py::arg("automaton"), "Canonical TLA text.");
    m.def(
        "validate",
        [](const tlaut::Automaton& a) {
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& v : tlaut::validate(a).violations) out.emplace_back(v.rule, v.description, v.subject);
            return out;
        },
        py::arg("automaton"), "List of (rule, description, subject); empty when valid.");

    m.def(
        "accepts",
        [](const tlaut::Automaton& a, const std::string& word, const std::string& engine) {
            return tlaut::Membership(a, engine_from(engine))(word);
        },
        py::arg("automaton"), py::arg("word"), py::arg("engine") = "auto");
    m.def(
        "run_fast",
        [](const tlaut::Automaton& a, const std::string& word) {
            auto r = tlaut::run_fast(a, word);
            py::dict stats;
            stats["deletions"] = r.stats.deletions;
            stats["end_events"] = r.stats.end_events;
            stats["index_ops"] = r.stats.index_ops;
            return py::make_tuple(r.verdict == tlaut::Verdict::Accept, stats);
        },
        py::arg("automaton"), py::arg("word"), "(accepted, stats) from the indexed engine.");
    m.def(
        "trace",
        [](const tlaut::Automaton& a, const std::string& word) {
            auto t = tlaut::trace_deterministic(a, word);
            if (auto* trace = std::get_if<tlaut::Trace>(&t)) return tlaut::render_trace(a, *trace);
            throw py::value_error("fuel exhausted");
        },
        py::arg("automaton"), py::arg("word"), "Step-by-step rendering of a deterministic run.");

    m.def(
        "enumerate",
        [](const tlaut::Automaton& a, std::size_t max_len, const std::string& engine) {
            return tlaut::enumerate_accepted(a, max_len, engine_from(engine)).accepted;
        },
        py::arg("automaton"), py::arg("max_len"), py::arg("engine") = "auto");
    m.def(
        "bounded_emptiness",
        [](const tlaut::Automaton& a, std::size_t max_len) -> std::optional<std::string> {
            auto r = tlaut::bounded_emptiness(a, max_len);
            if (auto* w = std::get_if<tlaut::Word>(&r)) return *w;
            return std::nullopt;
        },
        py::arg("automaton"), py::arg("max_len"), "Shortest accepted word, or None.");
    m.def(
        "parikh_sample",
        [](const tlaut::Automaton& a, std::size_t max_len) {
            auto s = tlaut::parikh_sample(a, max_len);
            return std::vector<tlaut::ParikhVector>(s.begin(), s.end());
        },
        py::arg("automaton"), py::arg("max_len"));
    m.def(
        "counterexample",
        [](const tlaut::Automaton& a, const tlaut::Automaton& b, std::size_t max_len) -> std::optional<std::string> {
            auto r = tlaut::equivalent_up_to(a, b, max_len);
            if (auto* c = std::get_if<tlaut::Counterexample>(&r)) return c->word;
            return std::nullopt;
        },
        py::arg("a"), py::arg("b"), py::arg("max_len"), "First word where the languages differ, or None.");
    m.def("to_dot", &tlaut::to_diagram, py::arg("automaton"));

    m.def("embed", &tlaut::embed_nfawtl);
    m.def("eliminate_end_loops", &tlaut::eliminate_end_loops);
    m.def("complete_reading", &tlaut::complete_reading);
    m.def("normalize", &tlaut::normalize);
    m.def("union", &tlaut::union_of);
    m.def("shuffle", &tlaut::disjoint_shuffle);
    m.def("complement", &tlaut::complement_deterministic);
    m.def("unary_nfa", [](const tlaut::Automaton& a) { return tlaut::serialize_nfa(tlaut::unary_to_nfa(a)); },
          "Text of the equivalent NFA over a one-letter alphabet.");

    m.def("fixture", [](const std::string& name) {
        for (auto& f : tlaut::corpus::all_fixtures()) {
            if (f.name == name) return f.automaton;
        }
        throw py::key_error(name);
    });
    m.def("fixture_names", [] {
        std::vector<std::string> names;
        for (auto& f : tlaut::corpus::all_fixtures()) names.push_back(f.name);
        return names;
    });
}

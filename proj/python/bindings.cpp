#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "synchrokit/families.hpp"
#include "synchrokit/io.hpp"
#include "synchrokit/monoid.hpp"
#include "synchrokit/pairgraph.hpp"
#include "synchrokit/search.hpp"
#include "synchrokit/sync.hpp"

namespace py = pybind11;
using namespace synchrokit;

namespace {

Dfa make_dfa(std::size_t n, const std::vector<std::pair<std::string, std::vector<State>>>& letters) {
    std::vector<Letter> ls;
    for (const auto& [name, images] : letters) ls.push_back({name, Transformation(images)});
    return Dfa(n, std::move(ls));
}

std::vector<std::pair<std::string, std::vector<State>>> letters_of(const Dfa& d) {
    std::vector<std::pair<std::string, std::vector<State>>> out;
    for (const auto& l : d.letters()) out.emplace_back(l.name, std::vector<State>(l.map.images().begin(), l.map.images().end()));
    return out;
}

ResetMethod method_of(const std::string& name) {
    if (name == "exact") return ResetMethod::ExactBfs;
    if (name == "pairchase") return ResetMethod::Pairchase;
    if (name == "extension") return ResetMethod::Extension;
    throw std::invalid_argument("unknown method '" + name + "'");
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

SearchConfig random_config(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned workers) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.mode = SearchMode::Random;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.workers = workers;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_synchrokit, m) {
    m.doc() = "Synchronizing automata: reset thresholds, reset words, pair digraphs";
    m.attr("__version__") = SYNCHROKIT_VERSION;

    py::register_exception<NotSynchronizing>(m, "NotSynchronizing", PyExc_ValueError);
    py::register_exception<PreconditionFailed>(m, "PreconditionFailed", PyExc_ValueError);

    py::class_<Dfa>(m, "Dfa")
        .def(py::init(&make_dfa), py::arg("n"), py::arg("letters"))
        .def_property_readonly("n", &Dfa::size)
        .def_property_readonly("letters", &letters_of)
        .def("to_text", [](const Dfa& d) { return to_text(d); })
        .def_static("parse", &parse_dfa, py::arg("content"))
        .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
        .def("__repr__", [](const Dfa& d) {
            return "<Dfa n=" + std::to_string(d.size()) + " letters=" + std::to_string(d.letter_count()) + ">";
        });

    m.def("cerny", &cerny, py::arg("n"));
    m.def("cb", &cb, py::arg("n"), py::arg("k"));
    m.def("v", &v, py::arg("n"));
    m.def("rystsov", &rystsov, py::arg("n"));
    m.def("f", &f, py::arg("n"));

    m.def(
        "reset_threshold",
        [](const Dfa& d) -> std::optional<std::pair<std::size_t, std::string>> {
            auto r = reset_threshold_exact(d);
            if (!r) return std::nullopt;
            return std::make_pair(r->reset_threshold, word_string(d, r->witness));
        },
        py::arg("dfa"), "Exact reset threshold and the lex-least shortest reset word, or None.");
    m.def("is_synchronizing", &is_synchronizing, py::arg("dfa"));
    m.def(
        "reset_word",
        [](const Dfa& d, const std::string& method) {
            ResetResult r;
            switch (method_of(method)) {
            case ResetMethod::ExactBfs: r = exact_reset_word(d); break;
            case ResetMethod::Pairchase: r = pairchase_reset_word(d); break;
            default: r = extension_reset_word(d); break;
            }
            return word_string(d, r.word);
        },
        py::arg("dfa"), py::arg("method") = "exact");
    m.def("cb_reset_word", [](std::size_t n, std::size_t k) { return word_string(cb(n, k), cb_reset_word(n, k).word); },
          py::arg("n"), py::arg("k"));
    m.def("is_reset_word", [](const Dfa& d, const std::string& w) { return is_reset_word(d, parse_word(d, w)); },
          py::arg("dfa"), py::arg("word"));

    m.def(
        "monoid_report",
        [](const Dfa& d) {
            auto r = monoid_report(d);
            py::dict out;
            out["full_Tn"] = r.full_transition_monoid;
            out["perm_group_order"] = py::int_(py::str(r.permutation_group_order.str()));
            out["two_transitive"] = r.two_transitive ? py::cast(*r.two_transitive) : py::none();
            return out;
        },
        py::arg("dfa"));

    m.def(
        "pair_diameter",
        [](const Dfa& d, unsigned workers) -> std::optional<std::size_t> {
            auto r = diameter(PairDigraph(d), workers);
            if (!r.strongly_connected) return std::nullopt;
            return r.diameter;
        },
        py::arg("dfa"), py::arg("workers") = 1, "Diameter of the pair digraph, or None if not strongly connected.");
    m.def(
        "pair_distance",
        [](const Dfa& d, std::pair<State, State> from, std::pair<State, State> to) -> std::optional<std::size_t> {
            auto p = pair_distance(PairDigraph(d), make_pair_of(from.first, from.second),
                                   make_pair_of(to.first, to.second));
            if (!p) return std::nullopt;
            return p->length;
        },
        py::arg("dfa"), py::arg("source"), py::arg("target"));
    m.def(
        "certificate_valid",
        [](std::size_t n) { return !verify_certificate(PairDigraph(f(n)), n_certificate(n)); }, py::arg("n"));
    m.def("table2_word", [](std::size_t n) { return word_string(f(n), table2_word(n)); }, py::arg("n"));

    m.def(
        "max_reset_threshold",
        [](std::size_t n, unsigned workers) {
            SearchConfig cfg;
            cfg.n = n;
            cfg.workers = workers;
            py::gil_scoped_release release;
            auto r = max_reset_threshold_exhaustive(cfg);
            py::gil_scoped_acquire acquire;
            return py::make_tuple(r.max_rt, r.witness.dfa);
        },
        py::arg("n"), py::arg("workers") = 1);
    m.def(
        "random_rt_experiment",
        [](std::size_t n, std::size_t trials, std::uint64_t seed, unsigned workers) {
            RtSummary s;
            {
                py::gil_scoped_release release;
                s = random_rt_experiment(random_config(n, trials, seed, workers));
            }
            return json_to_py(s.to_json());
        },
        py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("workers") = 1);
    m.def(
        "random_pair_diameter_experiment",
        [](std::size_t n, std::size_t samples, std::uint64_t seed, unsigned workers) {
            DiameterSummary s;
            {
                py::gil_scoped_release release;
                s = random_pair_diameter_experiment(random_config(n, samples, seed, workers));
            }
            return json_to_py(s.to_json());
        },
        py::arg("n"), py::arg("samples"), py::arg("seed") = 0, py::arg("workers") = 1);
}

// synchrokit: command-line front end.
//
// Exit codes: 0 success, 1 domain failure (JSON {"error": ...} on stdout),
// 2 usage error (message on stderr only).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "synchrokit/core.hpp"
#include "synchrokit/families.hpp"
#include "synchrokit/io.hpp"
#include "synchrokit/monoid.hpp"
#include "synchrokit/pairgraph.hpp"
#include "synchrokit/search.hpp"
#include "synchrokit/sync.hpp"

using nlohmann::json;
using namespace synchrokit;

namespace {

struct Input {
    std::string path;
    std::string family;
    std::size_t n = 0;
    std::size_t k = 0;

    void add_to(CLI::App* cmd, bool positional = true) {
        if (positional) cmd->add_option("dfa", path, "DFA file (text or JSON)");
        cmd->add_option("--family", family, "cerny|cb|v|rystsov|f");
        cmd->add_option("--n", n, "number of states");
        cmd->add_option("--k", k, "swap position for cb");
    }

    bool from_family() const { return !family.empty(); }

    FamilySpec spec() const {
        if (n == 0) throw std::invalid_argument("--family needs --n");
        FamilySpec s{parse_family(family), n, std::nullopt};
        if (s.family == Family::CB) {
            if (k == 0) throw std::invalid_argument("--family cb needs --k");
            s.k = k;
        }
        return s;
    }

    Dfa load() const {
        if (from_family() == !path.empty()) {
            throw std::invalid_argument("give either a DFA file or --family/--n");
        }
        if (from_family()) return make_family(spec());
        return read_dfa_file(path);
    }
};

unsigned default_workers() {
    if (const char* env = std::getenv("SYNCHROKIT_WORKERS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring SYNCHROKIT_WORKERS='" << env << "'\n";
    }
    return 1;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void write_or_print(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << content;
}

std::string pair_label(const Dfa& d, StatePair p, bool zero_based) {
    if (zero_based) return std::to_string(p.first) + "," + std::to_string(p.second);
    return d.state_label(p.first) + d.state_label(p.second);
}

json pair_json(StatePair p) { return json::array({p.first, p.second}); }

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// ------------------------------------------------------------------ commands

void cmd_gen(const Input& in, const std::string& format, const std::string& out_path) {
    Dfa d = make_family(in.spec());
    if (format == "json") {
        write_or_print(out_path, to_json(d).dump() + "\n");
    } else {
        write_or_print(out_path, to_text(d));
    }
}

void cmd_rt(const Input& in, std::size_t cap) {
    Dfa d = in.load();
    auto r = reset_threshold_exact(d, cap);
    if (!r) throw NotSynchronizing();
    emit({{"rt", r->reset_threshold},
          {"witness", word_names(d, r->witness)},
          {"verified", is_reset_word(d, r->witness)}});
}

void cmd_word(const Input& in, const std::string& method, std::size_t cap) {
    ResetResult r{Word{}, ResetMethod::ExactBfs, false};
    std::optional<Dfa> d;
    if (method == "cb") {
        std::size_t n = 0;
        std::size_t k = 0;
        if (in.from_family()) {
            auto s = in.spec();
            if (s.family != Family::CB) throw PreconditionFailed("method cb needs a cb automaton");
            n = s.n;
            k = *s.k;
        } else {
            Dfa loaded = in.load();
            n = loaded.size();
            for (std::size_t cand = 1; n >= 3 && cand < n; ++cand) {
                if (loaded == cb(n, cand)) k = cand;
            }
            if (k == 0) throw PreconditionFailed("automaton is not cb(n, k) for any k");
        }
        d = cb(n, k);
        r = cb_reset_word(n, k);
    } else {
        d = in.load();
        if (method == "exact") {
            r = exact_reset_word(*d, cap);
        } else if (method == "pairchase") {
            r = pairchase_reset_word(*d);
        } else if (method == "extension") {
            r = extension_reset_word(*d);
        } else {
            throw std::invalid_argument("unknown method '" + method + "'");
        }
    }
    emit({{"method", method_name(r.method)},
          {"length", r.length()},
          {"word", word_names(*d, r.word)},
          {"verified", is_reset_word(*d, r.word)}});
}

void cmd_monoid(const Input& in) {
    Dfa d = in.load();
    auto rep = monoid_report(d);
    json order;
    if (rep.permutation_group_order <= std::numeric_limits<std::uint64_t>::max()) {
        order = rep.permutation_group_order.convert_to<std::uint64_t>();
    } else {
        order = rep.permutation_group_order.str();
    }
    json j{{"full_Tn", rep.full_transition_monoid}, {"perm_group_order", order}};
    j["two_transitive"] = rep.two_transitive ? json(*rep.two_transitive) : json(nullptr);
    emit(j);
}

void cmd_pair_diam(const Input& in, unsigned workers) {
    Dfa d = in.load();
    PairDigraph g(d);
    auto r = diameter(g, workers);
    if (!r.strongly_connected) {
        const auto& [from, to] = r.witnesses.front();
        emit({{"error", "pair digraph is not strongly connected"},
              {"strongly_connected", false},
              {"unreachable_from", pair_json(from)},
              {"unreachable_to", pair_json(to)}});
        std::exit(1);
    }
    const auto& [from, to] = r.witnesses.front();
    auto path = pair_distance(g, from, to);
    json all = json::array();
    for (const auto& [u, v] : r.witnesses) all.push_back({pair_json(u), pair_json(v)});
    emit({{"diameter", r.diameter},
          {"strongly_connected", true},
          {"witness_from", pair_json(from)},
          {"witness_to", pair_json(to)},
          {"witness_from_label", pair_label(d, from, false)},
          {"witness_to_label", pair_label(d, to, false)},
          {"word", word_names(d, path->word)},
          {"argmax_pairs", all}});
}

StatePair certificate_target(std::size_t n) {
    if (n == 7) return {3, 6};
    const auto k = static_cast<State>((n - 5) / 2);
    return {k + 1, k + 3};
}

void cmd_certify(const Input& in) {
    auto s = in.spec();
    if (s.family != Family::F) throw std::invalid_argument("certify supports --family f only");
    if (s.n > 31) std::cerr << "warning: n = " << s.n << " above 31 may take a while\n";
    Dfa d = f(s.n);
    PairDigraph g(d);
    auto cert = n_certificate(s.n);
    auto violation = verify_certificate(g, cert);
    const StatePair source{1, 3};
    const StatePair target = certificate_target(s.n);
    const long long bound = cert.value(source) - cert.value(target);
    auto path = pair_distance(g, source, target);
    json j{{"valid", !violation},
           {"N_q2q4", cert.value(source)},
           {"bound", bound},
           {"target", pair_label(d, target, false)}};
    j["bfs_distance"] = path ? json(path->length) : json(nullptr);
    j["tight"] = path && !violation && static_cast<long long>(path->length) == bound;
    if (violation) {
        j["violation"] = {{"from", pair_label(d, violation->from, false)},
                          {"to", pair_label(d, violation->to, false)},
                          {"letter", g.letter_names()[violation->letter]},
                          {"before", violation->before},
                          {"after", violation->after}};
        emit(j);
        std::exit(1);
    }
    emit(j);
}

void cmd_export_dot(const Input& in, bool pair_graph, bool n_values, bool zero_based,
                    const std::string& out_path) {
    Dfa d = in.load();
    std::ostringstream dot;
    auto state_name = [&](State q) { return zero_based ? std::to_string(q) : d.state_label(q); };
    if (!pair_graph) {
        if (n_values) throw std::invalid_argument("--n-values needs --pair-digraph");
        dot << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
        for (State q = 0; q < d.size(); ++q) dot << "  \"" << dot_escape(state_name(q)) << "\";\n";
        for (State q = 0; q < d.size(); ++q) {
            std::map<State, std::string> labels;
            for (const auto& l : d.letters()) {
                auto& lab = labels[l.map[q]];
                lab += (lab.empty() ? "" : ",") + l.name;
            }
            for (const auto& [r, lab] : labels) {
                dot << "  \"" << dot_escape(state_name(q)) << "\" -> \"" << dot_escape(state_name(r))
                    << "\" [label=\"" << dot_escape(lab) << "\"];\n";
            }
        }
        dot << "}\n";
        write_or_print(out_path, dot.str());
        return;
    }
    PairDigraph g(d);
    std::optional<PairCertificate> cert;
    if (n_values) cert = n_certificate(d.size());
    auto vname = [&](std::size_t v) {
        StatePair p = g.pair(v);
        return zero_based ? state_name(p.first) + "," + state_name(p.second)
                          : state_name(p.first) + state_name(p.second);
    };
    dot << "digraph pairs {\n  node [shape=ellipse];\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        dot << "  \"" << dot_escape(vname(v)) << "\"";
        if (cert) dot << " [label=\"" << dot_escape(vname(v)) << "\\n" << cert->value(g.pair(v)) << "\"]";
        dot << ";\n";
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::map<std::size_t, std::string> labels;
        for (std::size_t a = 0; a < g.letter_count(); ++a) {
            auto& lab = labels[g.successor(v, a)];
            lab += (lab.empty() ? "" : ",") + g.letter_names()[a];
        }
        for (const auto& [u, lab] : labels) {
            dot << "  \"" << dot_escape(vname(v)) << "\" -> \"" << dot_escape(vname(u)) << "\" [label=\""
                << dot_escape(lab) << "\"];\n";
        }
    }
    dot << "}\n";
    write_or_print(out_path, dot.str());
}

void cmd_search(SearchConfig cfg, const std::string& mode, const std::string& experiment) {
    cfg.mode = parse_mode(mode);
    std::string exp = experiment;
    if (exp.empty()) exp = cfg.mode == SearchMode::Exhaustive ? "max-rt" : "rt";
    if (exp == "max-rt") {
        if (cfg.mode != SearchMode::Exhaustive) throw std::invalid_argument("max-rt is an exhaustive experiment");
        auto r = max_reset_threshold_exhaustive(cfg);
        emit({{"n", cfg.n},
              {"max_rt", r.max_rt},
              {"records", r.records.size()},
              {"units", r.units},
              {"witness_dfa", to_json(r.witness.dfa)},
              {"witness_word", word_names(r.witness.dfa, r.witness.witness)}});
    } else if (exp == "rt") {
        if (cfg.mode != SearchMode::Random) throw std::invalid_argument("rt experiment needs --mode random");
        auto s = random_rt_experiment(cfg).to_json();
        s["n"] = cfg.n;
        emit(s);
    } else if (exp == "pair-diameter") {
        auto s = random_pair_diameter_experiment(cfg).to_json();
        s["n"] = cfg.n;
        emit(s);
    } else {
        throw std::invalid_argument("unknown experiment '" + exp + "' (max-rt|rt|pair-diameter)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synchronizing automata toolkit"};
    app.set_version_flag("--version", std::string(SYNCHROKIT_VERSION));
    app.require_subcommand(1);

    Input in;
    std::string out_path;
    std::string format = "text";
    std::size_t cap = default_exact_cap;
    std::string method;
    unsigned workers = default_workers();
    bool pair_graph = false;
    bool n_values = false;
    bool zero_based = false;

    auto* gen = app.add_subcommand("gen", "generate a family automaton");
    gen->add_option("--family", in.family, "cerny|cb|v|rystsov|f")->required();
    gen->add_option("--n", in.n, "number of states")->required();
    gen->add_option("--k", in.k, "swap position for cb");
    gen->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    gen->add_option("-o,--output", out_path, "output file");

    auto* rt = app.add_subcommand("rt", "exact reset threshold");
    in.add_to(rt);
    rt->add_option("--cap", cap, "largest n for the subset search");

    auto* word = app.add_subcommand("word", "reset word by a chosen method");
    in.add_to(word);
    word->add_option("--method", method, "exact|pairchase|extension|cb")
        ->required()
        ->check(CLI::IsMember({"exact", "pairchase", "extension", "cb"}));
    word->add_option("--cap", cap, "largest n for the exact method");

    auto* monoid = app.add_subcommand("monoid-check", "transition monoid report");
    in.add_to(monoid);

    auto* pdiam = app.add_subcommand("pair-diam", "pair digraph diameter");
    in.add_to(pdiam);
    pdiam->add_option("--workers", workers, "threads");

    auto* certify = app.add_subcommand("certify", "verify the pair potential for F_n");
    in.add_to(certify, false);

    SearchConfig cfg;
    std::string mode = "exhaustive";
    std::string experiment;
    std::string summarize_path;
    auto* search = app.add_subcommand("search", "exhaustive and random experiments");
    search->add_option("--n", cfg.n, "number of states");
    search->add_option("--mode", mode, "exhaustive|random")->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--experiment", experiment, "max-rt|rt|pair-diameter");
    search->add_option("--trials", cfg.trials, "random trials");
    search->add_option("--seed", cfg.seed, "random seed");
    search->add_option("--workers", cfg.workers, "threads")->default_val(workers);
    search->add_option("--out", cfg.output_path, "JSON-lines output file");
    search->add_flag("--allow-large", cfg.allow_large, "lift the exhaustive caps");
    search->add_flag("--sample-corank-letter", cfg.sample_corank_letter,
                     "sample the rank n-1 letter instead of fixing it");
    auto* summarize = search->add_subcommand("summarize", "re-verify a search file and summarise it");
    summarize->add_option("file", summarize_path, "search output")->required();

    auto* dot = app.add_subcommand("export-dot", "Graphviz export");
    in.add_to(dot);
    dot->add_flag("--pair-digraph", pair_graph, "export the pair digraph of the permutation letters");
    dot->add_flag("--n-values", n_values, "label pair vertices with the potential N");
    dot->add_flag("--zero-based-labels", zero_based, "use 0-based state numbers");
    dot->add_option("-o,--output", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            cmd_gen(in, format, out_path);
        } else if (rt->parsed()) {
            cmd_rt(in, cap);
        } else if (word->parsed()) {
            cmd_word(in, method, cap);
        } else if (monoid->parsed()) {
            cmd_monoid(in);
        } else if (pdiam->parsed()) {
            cmd_pair_diam(in, workers);
        } else if (certify->parsed()) {
            cmd_certify(in);
        } else if (search->parsed()) {
            if (summarize->parsed()) {
                emit(summarize_search_file(summarize_path).to_json());
            } else {
                if (cfg.n == 0) throw std::invalid_argument("search needs --n");
                cmd_search(cfg, mode, experiment);
            }
        } else if (dot->parsed()) {
            cmd_export_dot(in, pair_graph, n_values, zero_based, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        emit({{"error", e.what()}});
        return 1;
    }
    return 0;
}

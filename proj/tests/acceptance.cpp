// Acceptance suite: one PASS/FAIL line per criterion. `--extended` adds the
// long-running n = 6, 7 rows of the exhaustive reset-threshold table.

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "synchrokit/families.hpp"
#include "synchrokit/monoid.hpp"
#include "synchrokit/pairgraph.hpp"
#include "synchrokit/search.hpp"
#include "synchrokit/sync.hpp"

using namespace synchrokit;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail.str("");
            detail << "failed: " << what;
        }
    }
};

std::size_t ceil_log2(std::size_t n) {
    return static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void largest_thresholds(Outcome& o, bool extended) {
    const std::size_t expected[] = {0, 0, 1, 4, 8, 14, 19, 27};
    const std::size_t last = extended ? 7 : 5;
    for (std::size_t n = 2; n <= last; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.workers = std::max(1U, std::thread::hardware_concurrency());
        auto r = max_reset_threshold_exhaustive(cfg);
        o.require(r.max_rt == expected[n] && r.witness.verify(),
                  "n = " + std::to_string(n) + " gave " + std::to_string(r.max_rt));
        if (o.pass) o.detail << "n=" << n << ":" << r.max_rt << " ";
    }
    if (!extended && o.pass) o.detail << "(n=6,7 in --extended)";
}

void v_family_threshold(Outcome& o) {
    for (std::size_t n = 3; n <= 10; ++n) {
        const auto expected = static_cast<std::int64_t>(n * (n - 1) / 2);
        auto r = reset_threshold_exact(v(n));
        o.require(r && static_cast<std::int64_t>(r->reset_threshold) == expected,
                  "rt(V_" + std::to_string(n) + ")");
        std::vector<std::int64_t> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::int64_t>(i);
        auto p = potential_lower_bound(v(n), w, StateSet::singleton(n, 0));
        o.require(std::holds_alternative<PotentialBound>(p) && std::get<PotentialBound>(p).bound == expected,
                  "potential bound for V_" + std::to_string(n));
    }
    if (o.pass) o.detail << "rt(V_n) = potential bound = n(n-1)/2 for n=3..10";
}

void cb_round_words(Outcome& o) {
    std::size_t checked = 0;
    for (std::size_t n = 3; n <= 200; ++n) {
        const std::size_t limit = 4 * n * ceil_log2(n);
        for (std::size_t k : {std::size_t{1}, std::size_t{2}, n / 2, n - 1}) {
            auto r = cb_reset_word(n, k);
            Dfa d = cb(n, k);
            o.require(is_reset_word(d, r.word) && r.length() < limit,
                      "cb(" + std::to_string(n) + "," + std::to_string(k) + ") length " + std::to_string(r.length()));
            if (k == 1) {
                Word expected;
                expected.push(1);
                for (std::size_t i = 0; i + 2 < n; ++i) expected.push(2).push(0).push(1);
                o.require(r.word == expected && r.length() == 3 * n - 5, "b(cab)^(n-2) for n=" + std::to_string(n));
            }
            ++checked;
        }
    }
    if (o.pass) o.detail << checked << " (n,k) words reset within 4n*ceil(log2 n)";
}

void extension_words(Outcome& o) {
    for (std::size_t n = 4; n <= 40; ++n) {
        for (const Dfa& d : {v(n), cb(n, n / 2)}) {
            auto r = extension_reset_word(d);
            o.require(is_reset_word(d, r.word) && r.length() <= 2 * n * n - 6 * n + 5,
                      "extension length " + std::to_string(r.length()) + " at n=" + std::to_string(n));
            o.require(GammaStratification(d).strongly_connected(2 * n - 3),
                      "Gamma_{2n-3} not strongly connected at n=" + std::to_string(n));
        }
    }
    if (o.pass) o.detail << "V_n and CB_{n,n/2}, n=4..40";
}

void f_family_distances(Outcome& o) {
    PairDigraph g7(f(7));
    auto p = pair_distance(g7, {1, 3}, {3, 6});
    o.require(p && p->length == 15, "F_7 distance q2q4 -> q4q7");
    for (std::size_t n : {11, 13, 15, 17, 19}) {
        auto d = diameter(PairDigraph(f(n)));
        // n^2/4 + 5n/4 - 7 for n = 3 (mod 4), minus a further 1/2 for n = 1 (mod 4)
        std::size_t expected = n % 4 == 3 ? (n * n + 5 * n - 28) / 4 : (n * n + 5 * n - 30) / 4;
        o.require(d.strongly_connected && d.diameter == expected,
                  "diameter(F_" + std::to_string(n) + ") = " + std::to_string(d.diameter));
        if (o.pass) o.detail << "F_" << n << ":" << d.diameter << " ";
    }
}

void certificates(Outcome& o) {
    for (std::size_t n : {7, 11, 15, 19}) {
        PairDigraph g(f(n));
        auto c = n_certificate(n);
        o.require(!verify_certificate(g, c), "certificate invalid for n=" + std::to_string(n));
        if (n == 7) continue;
        const auto expected = static_cast<long long>((n * n + 5 * n) / 4) - 7;
        const auto k = static_cast<State>((n - 5) / 2);
        const StatePair target{k + 1, k + 3};
        o.require(c.value(1, 3) == expected, "N(q2q4) for n=" + std::to_string(n));
        o.require(c.value(target) == 0, "N(q_{k+2}q_{k+4}) for n=" + std::to_string(n));
        Word w = table2_word(n);
        auto img = image_of(f(n), std::vector<State>{1, 3}, w);
        o.require(img.size() == 2 && StatePair{img[0], img[1]} == target, "word endpoint for n=" + std::to_string(n));
        auto bfs = pair_distance(g, {1, 3}, target);
        o.require(static_cast<long long>(w.length()) == expected && bfs && bfs->length == w.length(),
                  "word length vs BFS for n=" + std::to_string(n));
    }
    if (o.pass) o.detail << "valid for n=7,11,15,19; explicit words tight";
}

void properties(Outcome& o) {
    // Every synthesizer output resets.
    for (std::size_t n = 3; n <= 9; ++n) {
        for (const Dfa& d : {v(n), cb(n, 2), cerny(n), rystsov(n)}) {
            auto e = exact_reset_word(d);
            auto p = pairchase_reset_word(d);
            o.require(e.verified && is_reset_word(d, e.word), "exact word");
            o.require(p.verified && is_reset_word(d, p.word), "pairchase word");
            if (has_full_transition_monoid(d)) {
                auto x = extension_reset_word(d);
                o.require(x.verified && is_reset_word(d, x.word), "extension word");
            }
        }
        auto c = cb_reset_word(n, n / 2);
        o.require(c.verified && is_reset_word(cb(n, n / 2), c.word), "cb word");
    }

    // Split associativity of apply_word.
    oracle::Lcg rng{2718};
    for (int i = 0; i < 10000; ++i) {
        std::size_t n = 2 + rng.below(12);
        Dfa d(n, {{"a", oracle::random_map(n, rng)}, {"b", oracle::random_map(n, rng)}});
        Word u;
        Word w;
        for (std::size_t j = rng.below(10); j > 0; --j) u.push(static_cast<LetterIndex>(rng.below(2)));
        for (std::size_t j = rng.below(10); j > 0; --j) w.push(static_cast<LetterIndex>(rng.below(2)));
        StateSet s(n, rng.next() & ((std::uint64_t{1} << n) - 1));
        o.require(apply_word(s, d, u + w) == apply_word(apply_word(s, d, u), d, w), "apply_word split");
    }

    // Canonical form: idempotent and rt-preserving.
    for (int i = 0; i < 100; ++i) {
        Dfa d(5, {{"a", oracle::random_perm(5, rng)}, {"b", oracle::random_perm(5, rng)}, {"c", oracle::random_map(5, rng)}});
        Dfa c = canonical_form(d);
        o.require(canonical_form(c) == c, "canonical form idempotence");
        o.require(oracle::reset_threshold(c) == oracle::reset_threshold(d), "canonical form rt");
    }

    // Group order against closure.
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + rng.below(7);
        std::vector<Transformation> gens{oracle::random_perm(n, rng)};
        if (rng.below(2) == 0) gens.push_back(oracle::random_perm(n, rng));
        o.require(PermutationGroup(n, gens).order() == oracle::closure_size(gens, n), "group order");
    }

    // Seeded search output is byte-identical across reruns.
    const auto dir = std::filesystem::temp_directory_path();
    SearchConfig cfg;
    cfg.mode = SearchMode::Random;
    cfg.n = 7;
    cfg.trials = 100;
    cfg.seed = 77;
    cfg.output_path = (dir / "synchrokit_acceptance_a.jsonl").string();
    random_rt_experiment(cfg);
    std::string first = slurp(cfg.output_path);
    cfg.workers = 3;
    random_rt_experiment(cfg);
    o.require(!first.empty() && slurp(cfg.output_path) == first, "random search reproducibility");
    SearchConfig ex;
    ex.n = 4;
    ex.output_path = (dir / "synchrokit_acceptance_b.jsonl").string();
    std::filesystem::remove(ex.output_path);
    max_reset_threshold_exhaustive(ex);
    std::string ex_first = slurp(ex.output_path);
    std::filesystem::remove(ex.output_path);
    ex.workers = 2;
    max_reset_threshold_exhaustive(ex);
    o.require(slurp(ex.output_path) == ex_first, "exhaustive search reproducibility");
    std::filesystem::remove(cfg.output_path);
    std::filesystem::remove(ex.output_path);
    if (o.pass) o.detail << "synthesizers, split associativity x10^4, canonical form x100, group order, reruns";
}

void random_thresholds(Outcome& o) {
    SearchConfig cfg;
    cfg.mode = SearchMode::Random;
    cfg.n = 10;
    cfg.trials = 500;
    cfg.seed = 20240601;
    auto s = random_rt_experiment(cfg);
    bool within = true;
    for (auto v : s.values) within = within && v <= 81;
    o.require(s.synchronizing == 500 && within, std::to_string(s.synchronizing) + "/500 synchronizing, max rt " +
                                                    std::to_string(s.max) + (within ? " <= 81" : " > 81"));
    if (o.pass) o.detail << "500/500 synchronizing, max rt " << s.max << ", mean " << s.mean;
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;
    }
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"1 largest reset thresholds (exhaustive)", [&](Outcome& o) { largest_thresholds(o, extended); }},
        {"2 rt(V_n) and potential bound", v_family_threshold},
        {"3 cb rounds length", cb_round_words},
        {"4 extension length and Gamma connectivity", extension_words},
        {"5 F_n pair distances and diameters", f_family_distances},
        {"6 N certificates and explicit words", certificates},
        {"7 property suites", properties},
        {"8 random rt experiment", random_thresholds},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail.str("");
            o.detail << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << o.detail.str() << "] ("
                  << secs << "s)" << std::endl;
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}

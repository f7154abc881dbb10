#include "synchrokit/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "synchrokit/io.hpp"
#include "synchrokit/monoid.hpp"
#include "synchrokit/pairgraph.hpp"
#include "synchrokit/sync.hpp"

namespace synchrokit {

using nlohmann::json;

// ------------------------------------------------------------------ canonical form

namespace {

// BFS numbering from `start`, following letters in `order`. Empty when some
// state is unreachable.
std::vector<State> bfs_numbering(const Dfa& d, const std::vector<LetterIndex>& order, State start) {
    const std::size_t n = d.size();
    constexpr State unset = static_cast<State>(-1);
    std::vector<State> label(n, unset);
    std::vector<State> queue{start};
    label[start] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        State q = queue[head];
        for (LetterIndex a : order) {
            State r = d.letter(a).map[q];
            if (label[r] == unset) {
                label[r] = static_cast<State>(queue.size());
                queue.push_back(r);
            }
        }
    }
    if (queue.size() != n) return {};
    return label;
}

std::vector<State> relabeled_table(const Dfa& d, const std::vector<LetterIndex>& order,
                                   const std::vector<State>& label) {
    const std::size_t n = d.size();
    std::vector<State> table(order.size() * n);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& t = d.letter(order[i]).map;
        for (State q = 0; q < n; ++q) table[i * n + label[q]] = label[t[q]];
    }
    return table;
}

Dfa build_from(const Dfa& d, const std::vector<LetterIndex>& order, const std::vector<State>& label) {
    const std::size_t n = d.size();
    auto table = relabeled_table(d, order, label);
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < order.size(); ++i) {
        letters.push_back({d.letter(order[i]).name,
                           Transformation(std::vector<State>(table.begin() + i * n,
                                                             table.begin() + (i + 1) * n))});
    }
    return Dfa(n, std::move(letters));
}

// Calls f on every reordering of `order` that permutes only within runs of
// equal rank, in lexicographic order of the reordering.
template <class F>
void for_each_group_order(const std::vector<LetterIndex>& order, const std::vector<std::size_t>& ranks,
                          F&& f) {
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && ranks[order[j]] == ranks[order[i]]) ++j;
        runs.emplace_back(i, j);
        i = j;
    }
    std::vector<LetterIndex> cur = order;
    // Odometer over the runs; each run cycles through its permutations.
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == runs.size()) {
            f(cur);
            return;
        }
        auto [lo, hi] = runs[r];
        std::sort(cur.begin() + lo, cur.begin() + hi);
        do {
            rec(r + 1);
        } while (std::next_permutation(cur.begin() + lo, cur.begin() + hi));
    };
    rec(0);
}

}  // namespace

Dfa canonical_form(const Dfa& d) {
    const std::size_t n = d.size();
    std::vector<std::size_t> ranks(d.letter_count());
    for (LetterIndex a = 0; a < d.letter_count(); ++a) ranks[a] = d.letter(a).map.rank();
    std::vector<LetterIndex> order(d.letter_count());
    std::iota(order.begin(), order.end(), LetterIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](LetterIndex x, LetterIndex y) { return ranks[x] > ranks[y]; });

    std::optional<std::vector<State>> best_table;
    std::vector<LetterIndex> best_order;
    std::vector<State> best_label;
    auto offer = [&](const std::vector<LetterIndex>& ord, const std::vector<State>& label) {
        auto table = relabeled_table(d, ord, label);
        if (!best_table || table < *best_table) {
            best_table = std::move(table);
            best_order = ord;
            best_label = label;
        }
    };

    bool any_reaching = false;
    for_each_group_order(order, ranks, [&](const std::vector<LetterIndex>& ord) {
        for (State s = 0; s < n; ++s) {
            auto label = bfs_numbering(d, ord, s);
            if (label.empty()) continue;
            any_reaching = true;
            offer(ord, label);
        }
    });
    if (!any_reaching) {
        if (n > 8) {
            // No state reaches all others: only letters are normalised.
            std::vector<State> label(n);
            std::iota(label.begin(), label.end(), State{0});
            return build_from(d, order, label);
        }
        for_each_group_order(order, ranks, [&](const std::vector<LetterIndex>& ord) {
            std::vector<State> label(n);
            std::iota(label.begin(), label.end(), State{0});
            do {
                offer(ord, label);
            } while (std::next_permutation(label.begin(), label.end()));
        });
    }
    return build_from(d, best_order, best_label);
}

// ------------------------------------------------------------------ config and records

std::string mode_name(SearchMode m) { return m == SearchMode::Exhaustive ? "exhaustive" : "random"; }

SearchMode parse_mode(const std::string& name) {
    if (name == "exhaustive") return SearchMode::Exhaustive;
    if (name == "random") return SearchMode::Random;
    throw std::invalid_argument("unknown search mode '" + name + "' (exhaustive|random)");
}

// Worker count and output path do not affect results and are left out, so
// files from different worker counts are byte-identical.
json SearchConfig::to_json() const {
    return json{{"n", n},
                {"mode", mode_name(mode)},
                {"trials", trials},
                {"seed", seed},
                {"allow_large", allow_large},
                {"sample_corank_letter", sample_corank_letter}};
}

namespace {

SearchConfig config_from_json(const json& j) {
    SearchConfig c;
    c.n = j.at("n").get<std::size_t>();
    c.mode = parse_mode(j.at("mode").get<std::string>());
    c.trials = j.at("trials").get<std::size_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.allow_large = j.at("allow_large").get<bool>();
    c.sample_corank_letter = j.at("sample_corank_letter").get<bool>();
    return c;
}

json header_json(const SearchConfig& cfg, const std::string& kind) {
    return json{{"type", "header"},
                {"format_version", search_format_version},
                {"experiment", kind},
                {"config", cfg.to_json()}};
}

}  // namespace

json SearchRecord::to_json() const {
    return json{{"type", "record"},
                {"rt", rt},
                {"witness", word_names(dfa, witness)},
                {"dfa", synchrokit::to_json(dfa)},
                {"timestamp", timestamp},
                {"config", config.to_json()}};
}

SearchRecord SearchRecord::from_json(const json& j) {
    Dfa d = synchrokit::from_json(j.at("dfa"));
    Word w;
    for (const auto& name : j.at("witness")) {
        auto a = d.find_letter(name.get<std::string>());
        if (!a) throw std::invalid_argument("record witness uses unknown letter");
        w.push(*a);
    }
    return SearchRecord{std::move(d), j.at("rt").get<std::size_t>(), std::move(w),
                        j.at("timestamp").get<std::uint64_t>(), config_from_json(j.at("config"))};
}

bool SearchRecord::verify() const { return witness.length() == rt && is_reset_word(dfa, witness); }

// ------------------------------------------------------------------ exhaustive search

namespace {

std::vector<std::vector<State>> all_permutations(std::size_t n) {
    std::vector<State> p(n);
    std::iota(p.begin(), p.end(), State{0});
    std::vector<std::vector<State>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// One representative per conjugacy class of rank n-1 maps, each with
// excluded state 1 and duplicate state 0.
std::vector<std::vector<State>> corank_one_classes(std::size_t n) {
    std::set<std::vector<State>> maps;
    for (auto sigma : all_permutations(n)) {
        for (auto& q : sigma) {
            if (q == 1) q = 0;
        }
        maps.insert(sigma);
    }
    // Conjugation by permutations fixing 0 and 1 keeps (excluded, duplicate).
    std::vector<std::vector<State>> fixing;
    for (const auto& pi : all_permutations(n)) {
        if (pi[0] == 0 && pi[1] == 1) fixing.push_back(pi);
    }
    std::set<std::vector<State>> reps;
    for (const auto& t : maps) {
        std::vector<State> best;
        std::vector<State> c(n);
        for (const auto& pi : fixing) {
            for (std::size_t i = 0; i < n; ++i) c[pi[i]] = pi[t[i]];
            if (best.empty() || c < best) best = c;
        }
        reps.insert(best);
    }
    return {reps.begin(), reps.end()};
}

// Reset threshold over masks of at most 8 states, letters given as image
// tables of all 256 masks.
int small_rt(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c, std::size_t n) {
    const unsigned full = (1U << n) - 1;
    std::uint64_t seen[4] = {0, 0, 0, 0};
    auto mark = [&](unsigned s) {
        std::uint64_t bit = std::uint64_t{1} << (s & 63);
        if (seen[s >> 6] & bit) return false;
        seen[s >> 6] |= bit;
        return true;
    };
    std::uint8_t buf[2][256];
    std::size_t size = 1;
    buf[0][0] = static_cast<std::uint8_t>(full);
    mark(full);
    int depth = 0;
    int cur = 0;
    while (size > 0) {
        ++depth;
        std::size_t next = 0;
        for (std::size_t i = 0; i < size; ++i) {
            unsigned s = buf[cur][i];
            for (const std::uint8_t* t : {a, b, c}) {
                unsigned r = t[s];
                if (!mark(r)) continue;
                if ((r & (r - 1)) == 0) return depth;
                buf[1 - cur][next++] = static_cast<std::uint8_t>(r);
            }
        }
        size = next;
        cur = 1 - cur;
    }
    return -1;
}

std::vector<std::uint8_t> mask_table(const std::vector<State>& t) {
    std::vector<std::uint8_t> out(256, 0);
    for (unsigned s = 0; s < 256; ++s) {
        unsigned r = 0;
        for (std::size_t q = 0; q < t.size(); ++q) {
            if ((s >> q) & 1U) r |= 1U << t[q];
        }
        out[s] = static_cast<std::uint8_t>(r);
    }
    return out;
}

struct UnitBest {
    int rt = -1;
    std::size_t p2 = 0;
};

class ExhaustiveSearch {
public:
    explicit ExhaustiveSearch(const SearchConfig& cfg)
        : cfg_(cfg), n_(cfg.n), perms_(all_permutations(cfg.n)), classes_(corank_one_classes(cfg.n)) {
        if (n_ <= 8) {
            for (const auto& p : perms_) perm_tables_.push_back(mask_table(p));
            for (const auto& t : classes_) class_tables_.push_back(mask_table(t));
        }
    }

    std::size_t unit_count() const { return classes_.size() * perms_.size(); }

    UnitBest run_unit(std::size_t unit) const {
        const std::size_t cls = unit / perms_.size();
        const std::size_t p1 = unit % perms_.size();
        UnitBest best;
        for (std::size_t p2 = p1; p2 < perms_.size(); ++p2) {
            int rt = n_ <= 8 ? small_rt(perm_tables_[p1].data(), perm_tables_[p2].data(),
                                        class_tables_[cls].data(), n_)
                             : reset_threshold_value(automaton(cls, p1, p2));
            if (rt <= best.rt) continue;
            std::vector<Transformation> gens{Transformation(perms_[p1]), Transformation(perms_[p2])};
            if (!generates_symmetric_group(gens, n_)) continue;
            best = {rt, p2};
        }
        return best;
    }

    Dfa automaton(std::size_t cls, std::size_t p1, std::size_t p2) const {
        return Dfa(n_, {{"a", Transformation(perms_[p1])},
                        {"b", Transformation(perms_[p2])},
                        {"c", Transformation(classes_[cls])}});
    }

    SearchRecord record(std::size_t unit, const UnitBest& best) const {
        Dfa d = canonical_form(automaton(unit / perms_.size(), unit % perms_.size(), best.p2));
        auto exact = reset_threshold_exact(d);
        if (!exact || static_cast<int>(exact->reset_threshold) != best.rt) {
            throw std::logic_error("exhaustive search: reset threshold changed under canonical form");
        }
        return SearchRecord{std::move(d), exact->reset_threshold, std::move(exact->witness), unit, cfg_};
    }

private:
    SearchConfig cfg_;
    std::size_t n_;
    std::vector<std::vector<State>> perms_;
    std::vector<std::vector<State>> classes_;
    std::vector<std::vector<std::uint8_t>> perm_tables_;
    std::vector<std::vector<std::uint8_t>> class_tables_;
};

struct ResumeState {
    std::size_t completed_units = 0;
    std::vector<SearchRecord> records;
    std::optional<json> summary;
    std::uintmax_t valid_bytes = 0;
};

// Reads a partial run. Lines after the last complete, well-formed one are
// dropped; units must be contiguous from zero.
ResumeState read_resume(const std::string& path, const SearchConfig& cfg) {
    ResumeState st;
    std::ifstream in(path, std::ios::binary);
    std::string line;
    std::uintmax_t offset = 0;
    bool header_ok = false;
    while (std::getline(in, line)) {
        if (in.eof()) break;  // no trailing newline: partial write
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) break;
        const std::string type = j.value("type", "");
        if (!header_ok) {
            if (type != "header" || j.at("config") != cfg.to_json() ||
                j.value("format_version", 0) != search_format_version) {
                throw std::invalid_argument("search file " + path +
                                            " belongs to a different configuration");
            }
            header_ok = true;
        } else if (type == "unit") {
            if (j.at("unit").get<std::size_t>() != st.completed_units) break;
            ++st.completed_units;
        } else if (type == "record") {
            auto r = SearchRecord::from_json(j);
            if (!r.verify()) throw std::runtime_error("search file " + path + " has an invalid record");
            st.records.push_back(std::move(r));
        } else if (type == "summary") {
            st.summary = j;
        } else {
            break;
        }
        offset += line.size() + 1;
    }
    st.valid_bytes = header_ok ? offset : 0;
    return st;
}

}  // namespace

ExhaustiveResult max_reset_threshold_exhaustive(const SearchConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("exhaustive search needs n >= 2");
    if (cfg.n > exhaustive_rt_cap && !cfg.allow_large) {
        throw std::invalid_argument("exhaustive search is capped at n = " +
                                    std::to_string(exhaustive_rt_cap) + "; pass allow_large to override");
    }
    if (cfg.n > exhaustive_rt_cap) {
        std::cerr << "warning: exhaustive search for n = " << cfg.n << " will take very long\n";
    }
    ExhaustiveSearch search(cfg);
    const std::size_t units = search.unit_count();

    ResumeState resume;
    std::ofstream out;
    if (!cfg.output_path.empty()) {
        if (std::filesystem::exists(cfg.output_path)) resume = read_resume(cfg.output_path, cfg);
        if (resume.valid_bytes == 0) {
            out.open(cfg.output_path, std::ios::binary | std::ios::trunc);
            out << header_json(cfg, "max_reset_threshold").dump() << '\n';
        } else {
            std::filesystem::resize_file(cfg.output_path, resume.valid_bytes);
            out.open(cfg.output_path, std::ios::binary | std::ios::app);
        }
        if (!out) throw std::runtime_error("cannot write " + cfg.output_path);
    }

    std::vector<SearchRecord> records = std::move(resume.records);
    int global = records.empty() ? -1 : static_cast<int>(records.back().rt);
    std::size_t next_flush = resume.completed_units;

    std::vector<std::optional<UnitBest>> pending(units);
    std::mutex sink;
    auto flush = [&]() {
        while (next_flush < units && pending[next_flush]) {
            const UnitBest& b = *pending[next_flush];
            if (b.rt > global) {
                records.push_back(search.record(next_flush, b));
                global = b.rt;
                if (out.is_open()) out << records.back().to_json().dump() << '\n';
            }
            if (out.is_open()) out << json{{"type", "unit"}, {"unit", next_flush}, {"best_rt", b.rt}}.dump() << '\n';
            ++next_flush;
        }
        if (out.is_open()) out.flush();
    };

    if (!resume.summary) {
        std::atomic<std::size_t> next_unit{resume.completed_units};
        auto worker = [&]() {
            for (;;) {
                std::size_t u = next_unit.fetch_add(1);
                if (u >= units) return;
                UnitBest b = search.run_unit(u);
                std::lock_guard<std::mutex> lock(sink);
                pending[u] = b;
                flush();
            }
        };
        const unsigned workers = std::max(1U, cfg.workers);
        if (workers == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (records.empty()) throw std::logic_error("exhaustive search found no automaton");
        if (out.is_open()) {
            out << json{{"type", "summary"}, {"n", cfg.n}, {"max_rt", records.back().rt}, {"units", units}}.dump()
                << '\n';
        }
    }
    if (records.empty()) throw std::runtime_error("search file has a summary but no records");
    SearchRecord best = records.back();
    return ExhaustiveResult{best.rt, std::move(best), std::move(records), units};
}

ExhaustiveResult max_reset_threshold_exhaustive(std::size_t n) {
    SearchConfig cfg;
    cfg.n = n;
    return max_reset_threshold_exhaustive(cfg);
}

SearchFileSummary summarize_search_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    SearchFileSummary s{0, std::nullopt, 0, false, std::nullopt};
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        const std::string type = j.value("type", "");
        if (type == "header") {
            s.n = j.at("config").at("n").get<std::size_t>();
            header = true;
        } else if (type == "record") {
            auto r = SearchRecord::from_json(j);
            if (!r.verify()) {
                throw std::runtime_error("record at timestamp " + std::to_string(r.timestamp) +
                                         ": witness is not a reset word of length " + std::to_string(r.rt));
            }
            if (r.dfa.size() <= default_exact_cap) {
                int exact = reset_threshold_value(r.dfa);
                if (exact != static_cast<int>(r.rt)) {
                    throw std::runtime_error("record at timestamp " + std::to_string(r.timestamp) +
                                             ": stored rt " + std::to_string(r.rt) + " but exact rt is " +
                                             std::to_string(exact));
                }
            }
            ++s.records;
            if (!s.max_rt || r.rt > *s.max_rt) {
                s.max_rt = r.rt;
                s.best = std::move(r);
            }
        } else if (type == "summary") {
            s.complete = true;
        }
    }
    if (!header) throw std::runtime_error(path + " has no search header");
    return s;
}

json SearchFileSummary::to_json() const {
    json j{{"n", n}, {"records", records}, {"complete", complete}};
    j["max_rt"] = max_rt ? json(*max_rt) : json(nullptr);
    if (best) {
        j["witness_dfa"] = synchrokit::to_json(best->dfa);
        j["witness_word"] = word_string(best->dfa, best->witness);
    }
    return j;
}

// ------------------------------------------------------------------ random experiments

namespace {

template <class Item, class Eval, class Result>
void parallel_map(const std::vector<Item>& items, std::vector<Result>& out, unsigned workers, Eval eval) {
    out.resize(items.size());
    workers = std::max(1U, workers);
    if (workers == 1 || items.size() < 2) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = eval(items[i]);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) {
                out[i] = eval(items[i]);
            }
        });
    }
    for (auto& t : pool) t.join();
}

Transformation fixed_corank_letter(std::size_t n) {
    auto t = Transformation::identity(n);
    std::vector<State> images(t.images().begin(), t.images().end());
    images[1] = 0;
    return Transformation(std::move(images));
}

template <class Engine>
Transformation random_corank_letter(std::size_t n, Engine& rng) {
    auto sigma = random_permutation(n, rng);
    std::size_t x = uniform_below(n, rng);
    std::size_t y = uniform_below(n - 1, rng);
    if (y >= x) ++y;
    std::vector<State> images(sigma.images().begin(), sigma.images().end());
    images[x] = sigma[static_cast<State>(y)];
    return Transformation(std::move(images));
}

std::ofstream open_output(const SearchConfig& cfg, const std::string& kind) {
    std::ofstream out;
    if (cfg.output_path.empty()) return out;
    out.open(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + cfg.output_path);
    out << header_json(cfg, kind).dump() << '\n';
    return out;
}

}  // namespace

json RtSummary::to_json() const {
    return json{{"trials", trials},
                {"synchronizing", synchronizing},
                {"max", max},
                {"mean", mean},
                {"p99", p99},
                {"exact", exact},
                {"fraction_le_c_nlogn", {{"1", fraction_le_1}, {"2", fraction_le_2}, {"4", fraction_le_4}}}};
}

RtSummary random_rt_experiment(const SearchConfig& cfg) {
    if (cfg.mode != SearchMode::Random) throw std::invalid_argument("random_rt_experiment needs random mode");
    if (cfg.n < 2) throw std::invalid_argument("random_rt_experiment needs n >= 2");
    const std::size_t n = cfg.n;
    std::mt19937_64 rng(cfg.seed);
    const Transformation fixed = fixed_corank_letter(n);
    std::vector<Dfa> samples;
    samples.reserve(cfg.trials);
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        auto p1 = random_permutation(n, rng);
        auto p2 = random_permutation(n, rng);
        auto t = cfg.sample_corank_letter ? random_corank_letter(n, rng) : fixed;
        samples.push_back(Dfa(n, {{"a", p1}, {"b", p2}, {"c", t}}));
    }
    const bool exact = n <= default_exact_cap;
    std::vector<long long> values;
    parallel_map(samples, values, cfg.workers, [&](const Dfa& d) -> long long {
        if (exact) return reset_threshold_value(d);
        if (!is_synchronizing(d)) return -1;
        return static_cast<long long>(pairchase_reset_word(d).length());
    });

    RtSummary s;
    s.trials = cfg.trials;
    s.exact = exact;
    s.values = values;
    std::vector<long long> ok;
    for (auto v : values) {
        if (v >= 0) ok.push_back(v);
    }
    s.synchronizing = ok.size();
    if (!ok.empty()) {
        std::sort(ok.begin(), ok.end());
        s.max = static_cast<std::size_t>(ok.back());
        s.mean = static_cast<double>(std::accumulate(ok.begin(), ok.end(), 0LL)) / static_cast<double>(ok.size());
        std::size_t rank = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(ok.size())));
        s.p99 = static_cast<std::size_t>(ok[std::max<std::size_t>(rank, 1) - 1]);
        const double nlogn = static_cast<double>(n) * std::log2(static_cast<double>(n));
        auto frac = [&](double c) {
            auto cnt = std::count_if(ok.begin(), ok.end(), [&](long long v) { return static_cast<double>(v) <= c * nlogn; });
            return static_cast<double>(cnt) / static_cast<double>(ok.size());
        };
        s.fraction_le_1 = frac(1);
        s.fraction_le_2 = frac(2);
        s.fraction_le_4 = frac(4);
    }

    auto out = open_output(cfg, "random_rt");
    if (out.is_open()) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
            json line{{"type", "trial"}, {"index", i}, {"synchronizing", values[i] >= 0}};
            line["rt"] = values[i] >= 0 ? json(values[i]) : json(nullptr);
            line["dfa"] = to_json(samples[i]);
            out << line.dump() << '\n';
        }
        json summary = s.to_json();
        summary["type"] = "summary";
        out << summary.dump() << '\n';
    }
    return s;
}

json DiameterSummary::to_json() const {
    json j{{"samples", samples},
           {"strongly_connected", strongly_connected},
           {"not_strongly_connected", not_strongly_connected},
           {"max_diameter", max_diameter},
           {"mean_diameter", mean_diameter}};
    if (argmax) {
        auto imgs = [](const Transformation& t) { return std::vector<State>(t.images().begin(), t.images().end()); };
        j["argmax"] = {imgs(argmax->first), imgs(argmax->second)};
    } else {
        j["argmax"] = nullptr;
    }
    return j;
}

namespace {

// One permutation per cycle type: cycles on consecutive points, longest first.
std::vector<Transformation> cycle_type_representatives(std::size_t n) {
    std::vector<Transformation> reps;
    std::vector<std::size_t> parts;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
        if (left == 0) {
            std::vector<State> p(n);
            State start = 0;
            for (auto len : parts) {
                for (std::size_t i = 0; i < len; ++i) {
                    p[start + i] = static_cast<State>(start + (i + 1) % len);
                }
                start += static_cast<State>(len);
            }
            reps.emplace_back(std::move(p));
            return;
        }
        for (std::size_t part = std::min(left, max_part); part >= 1; --part) {
            parts.push_back(part);
            rec(left - part, part);
            parts.pop_back();
        }
    };
    rec(n, n);
    return reps;
}

struct PairSample {
    Transformation p1;
    Transformation p2;
};

std::optional<std::size_t> pair_diameter(const PairSample& s) {
    const std::size_t n = s.p1.degree();
    PairDigraph g(Dfa(n, {{"a", s.p1}, {"b", s.p2}}));
    auto d = diameter(g);
    if (!d.strongly_connected) return std::nullopt;
    return d.diameter;
}

}  // namespace

DiameterSummary random_pair_diameter_experiment(const SearchConfig& cfg) {
    const std::size_t n = cfg.n;
    if (n < 2) throw std::invalid_argument("pair diameter experiment needs n >= 2");
    if (cfg.mode == SearchMode::Exhaustive && n > exhaustive_pair_cap && !cfg.allow_large) {
        throw std::invalid_argument("exhaustive pair diameters are capped at n = " +
                                    std::to_string(exhaustive_pair_cap) + "; pass allow_large to override");
    }
    std::vector<PairSample> samples;
    if (cfg.mode == SearchMode::Random) {
        std::mt19937_64 rng(cfg.seed);
        for (std::size_t i = 0; i < cfg.trials; ++i) {
            auto p1 = random_permutation(n, rng);
            auto p2 = random_permutation(n, rng);
            samples.push_back({std::move(p1), std::move(p2)});
        }
    } else {
        auto perms = all_permutations(n);
        for (const auto& rep : cycle_type_representatives(n)) {
            for (const auto& p : perms) {
                Transformation p2(p);
                if (p2 == rep) continue;
                samples.push_back({rep, std::move(p2)});
            }
        }
    }
    std::vector<std::optional<std::size_t>> values;
    parallel_map(samples, values, cfg.workers, pair_diameter);

    DiameterSummary s;
    s.samples = samples.size();
    double total = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!values[i]) {
            ++s.not_strongly_connected;
            continue;
        }
        ++s.strongly_connected;
        total += static_cast<double>(*values[i]);
        if (!s.argmax || *values[i] > s.max_diameter) {
            s.max_diameter = *values[i];
            s.argmax = std::make_pair(samples[i].p1, samples[i].p2);
        }
    }
    if (s.strongly_connected > 0) s.mean_diameter = total / static_cast<double>(s.strongly_connected);

    auto out = open_output(cfg, "pair_diameter");
    if (out.is_open()) {
        if (cfg.mode == SearchMode::Random) {
            for (std::size_t i = 0; i < samples.size(); ++i) {
                json line{{"type", "sample"}, {"index", i}, {"strongly_connected", values[i].has_value()}};
                line["diameter"] = values[i] ? json(*values[i]) : json(nullptr);
                out << line.dump() << '\n';
            }
        }
        json summary = s.to_json();
        summary["type"] = "summary";
        out << summary.dump() << '\n';
    }
    return s;
}

}  // namespace synchrokit

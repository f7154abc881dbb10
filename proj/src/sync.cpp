#include "synchrokit/sync.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "synchrokit/families.hpp"
#include "synchrokit/monoid.hpp"

namespace synchrokit {

std::string method_name(ResetMethod m) {
    switch (m) {
        case ResetMethod::ExactBfs: return "exact";
        case ResetMethod::Pairchase: return "pairchase";
        case ResetMethod::Extension: return "extension";
        case ResetMethod::CbRounds: return "cb";
    }
    return "?";
}

namespace {

void check_exact_cap(const Dfa& d, std::size_t cap) {
    if (d.size() > cap || d.size() > StateSet::max_states) {
        throw std::invalid_argument("exact subset search is capped at " +
                                    std::to_string(std::min(cap, StateSet::max_states)) +
                                    " states (got " + std::to_string(d.size()) +
                                    "); use the pairchase or extension methods instead");
    }
}

std::vector<MaskMapper> mappers(const Dfa& d) {
    std::vector<MaskMapper> out;
    out.reserve(d.letter_count());
    for (const auto& l : d.letters()) out.emplace_back(l.map);
    return out;
}

constexpr std::size_t dense_limit = 22;

// Parent links for the exact search, dense below dense_limit states.
class ParentStore {
public:
    explicit ParentStore(std::size_t n) : dense_(n <= dense_limit) {
        if (dense_) {
            parent_.assign(std::size_t{1} << n, unvisited);
            letter_.assign(std::size_t{1} << n, 0);
        }
    }

    bool visited(std::uint64_t mask) const {
        return dense_ ? parent_[mask] != unvisited : sparse_.count(mask) != 0;
    }

    void set(std::uint64_t mask, std::uint64_t parent, LetterIndex a) {
        if (dense_) {
            parent_[mask] = static_cast<std::uint32_t>(parent);
            letter_[mask] = a;
        } else {
            sparse_.emplace(mask, std::make_pair(parent, a));
        }
    }

    std::pair<std::uint64_t, LetterIndex> get(std::uint64_t mask) const {
        if (dense_) return {parent_[mask], letter_[mask]};
        return sparse_.at(mask);
    }

private:
    static constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    bool dense_;
    std::vector<std::uint32_t> parent_;
    std::vector<LetterIndex> letter_;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, LetterIndex>> sparse_;
};

std::size_t pair_slot(std::size_t n, State i, State j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * n + j - (static_cast<std::size_t>(i) + 1) * (i + 2) / 2;
}

// Shortest merging words for every unordered pair, over all letters.
struct MergeTable {
    static constexpr std::uint32_t infinite = std::numeric_limits<std::uint32_t>::max();

    std::size_t n;
    std::vector<std::uint32_t> dist;  // 0 is never used: distinct states need >= 1 letter
    std::vector<LetterIndex> next;

    explicit MergeTable(const Dfa& d) : n(d.size()) {
        const std::size_t pairs = n * (n - 1) / 2;
        const std::size_t m = d.letter_count();
        dist.assign(pairs, infinite);
        next.assign(pairs, 0);
        std::vector<std::pair<State, State>> of(pairs);
        for (State i = 0; i < n; ++i) {
            for (State j = i + 1; j < n; ++j) of[pair_slot(n, i, j)] = {i, j};
        }
        // reverse adjacency, CSR
        std::vector<std::uint32_t> in_degree(pairs + 1, 0);
        std::vector<std::uint32_t> image(pairs * m);
        constexpr std::uint32_t merged = std::numeric_limits<std::uint32_t>::max();
        std::deque<std::uint32_t> queue;
        for (std::size_t p = 0; p < pairs; ++p) {
            auto [i, j] = of[p];
            for (LetterIndex a = 0; a < m; ++a) {
                const auto& t = d.letter(a).map;
                State x = t[i];
                State y = t[j];
                if (x == y) {
                    image[p * m + a] = merged;
                    if (dist[p] == infinite) {
                        dist[p] = 1;
                        queue.push_back(static_cast<std::uint32_t>(p));
                    }
                } else {
                    auto q = static_cast<std::uint32_t>(pair_slot(n, x, y));
                    image[p * m + a] = q;
                    ++in_degree[q + 1];
                }
            }
        }
        std::partial_sum(in_degree.begin(), in_degree.end(), in_degree.begin());
        std::vector<std::uint32_t> fill(in_degree.begin(), in_degree.end() - 1);
        std::vector<std::uint32_t> sources(in_degree.back());
        for (std::size_t p = 0; p < pairs; ++p) {
            for (std::size_t a = 0; a < m; ++a) {
                auto q = image[p * m + a];
                if (q != merged) sources[fill[q]++] = static_cast<std::uint32_t>(p);
            }
        }
        while (!queue.empty()) {
            auto q = queue.front();
            queue.pop_front();
            for (auto e = in_degree[q]; e < in_degree[q + 1]; ++e) {
                auto p = sources[e];
                if (dist[p] == infinite) {
                    dist[p] = dist[q] + 1;
                    queue.push_back(p);
                }
            }
        }
        for (std::size_t p = 0; p < pairs; ++p) {
            if (dist[p] == infinite) continue;
            for (LetterIndex a = 0; a < m; ++a) {
                auto q = image[p * m + a];
                if ((dist[p] == 1 && q == merged) ||
                    (q != merged && dist[q] != infinite && dist[q] + 1 == dist[p])) {
                    next[p] = a;
                    break;
                }
            }
        }
    }

    bool all_mergeable() const {
        return std::none_of(dist.begin(), dist.end(), [](auto x) { return x == infinite; });
    }
};

}  // namespace

// ------------------------------------------------------------------ exact

std::optional<ExactResult> reset_threshold_exact(const Dfa& d, std::size_t cap) {
    check_exact_cap(d, cap);
    const std::size_t n = d.size();
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (n == 1) return ExactResult{0, Word{}};

    auto maps = mappers(d);
    ParentStore store(n);
    store.set(full, full, 0);
    std::vector<std::uint64_t> frontier{full};
    std::vector<std::uint64_t> next;
    std::size_t depth = 0;
    while (!frontier.empty()) {
        ++depth;
        next.clear();
        for (std::uint64_t s : frontier) {
            for (LetterIndex a = 0; a < maps.size(); ++a) {
                std::uint64_t t = maps[a](s);
                if (store.visited(t)) continue;
                store.set(t, s, a);
                if (std::popcount(t) == 1) {
                    Word w;
                    for (std::uint64_t cur = t; cur != full;) {
                        auto [parent, letter] = store.get(cur);
                        w.push(letter);
                        cur = parent;
                    }
                    std::reverse(w.letters.begin(), w.letters.end());
                    return ExactResult{depth, std::move(w)};
                }
                next.push_back(t);
            }
        }
        frontier.swap(next);
    }
    return std::nullopt;
}

int reset_threshold_value(const Dfa& d, std::size_t cap) {
    check_exact_cap(d, cap);
    const std::size_t n = d.size();
    if (n == 1) return 0;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    auto maps = mappers(d);
    std::vector<std::uint64_t> seen((std::size_t{1} << n) / 64 + 1, 0);
    auto mark = [&](std::uint64_t s) {
        auto& word = seen[s >> 6];
        std::uint64_t bit = std::uint64_t{1} << (s & 63);
        if (word & bit) return false;
        word |= bit;
        return true;
    };
    mark(full);
    std::vector<std::uint64_t> frontier{full};
    std::vector<std::uint64_t> next;
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        next.clear();
        for (std::uint64_t s : frontier) {
            for (const auto& map : maps) {
                std::uint64_t t = map(s);
                if (!mark(t)) continue;
                if ((t & (t - 1)) == 0) return depth;
                next.push_back(t);
            }
        }
        frontier.swap(next);
    }
    return -1;
}

bool is_synchronizing(const Dfa& d) {
    if (d.size() == 1) return true;
    return MergeTable(d).all_mergeable();
}

ResetResult exact_reset_word(const Dfa& d, std::size_t cap) {
    auto r = reset_threshold_exact(d, cap);
    if (!r) throw NotSynchronizing();
    ResetResult out{std::move(r->witness), ResetMethod::ExactBfs, false};
    out.verified = is_reset_word(d, out.word);
    return out;
}

// ------------------------------------------------------------------ pairchase

ResetResult pairchase_reset_word(const Dfa& d) {
    const std::size_t n = d.size();
    ResetResult out{Word{}, ResetMethod::Pairchase, false};
    if (n == 1) {
        out.verified = true;
        return out;
    }
    MergeTable table(d);
    if (!table.all_mergeable()) throw NotSynchronizing();

    std::vector<State> current(n);
    std::iota(current.begin(), current.end(), State{0});
    while (current.size() > 1) {
        // closest pair of the current image; ties go to the smallest pair
        State p = 0;
        State q = 0;
        std::uint32_t best_dist = MergeTable::infinite;
        for (std::size_t x = 0; x < current.size(); ++x) {
            for (std::size_t y = x + 1; y < current.size(); ++y) {
                auto dist = table.dist[pair_slot(n, current[x], current[y])];
                if (dist < best_dist) {
                    best_dist = dist;
                    p = current[x];
                    q = current[y];
                }
            }
        }
        // follow the merge path of that pair
        Word step;
        while (p != q) {
            LetterIndex a = table.next[pair_slot(n, p, q)];
            step.push(a);
            const auto& t = d.letter(a).map;
            p = t[p];
            q = t[q];
        }
        current = image_of(d, current, step);
        out.word.append(step);
    }
    out.verified = is_reset_word(d, out.word);
    return out;
}

// ------------------------------------------------------------------ extension

GammaStratification::GammaStratification(const Dfa& d) : n_(d.size()) {
    index_.assign(n_ * n_, -1);
    const std::size_t n = n_;
    auto perms = d.permutation_letters();
    std::deque<std::size_t> queue;
    for (LetterIndex x = 0; x < d.letter_count(); ++x) {
        const auto& t = d.letter(x).map;
        if (t.rank() + 1 != n) continue;
        State u = t.excluded_state();
        State v = t.duplicate_state();
        if (index_[u * n + v] >= 0) continue;
        index_[u * n + v] = static_cast<int>(edges_.size());
        edges_.push_back({u, v, 0, x, Word{}});
        queue.push_back(edges_.size() - 1);
    }
    while (!queue.empty()) {
        std::size_t e = queue.front();
        queue.pop_front();
        for (LetterIndex a : perms) {
            const auto& t = d.letter(a).map;
            const GammaEdge& src = edges_[e];
            State u = t[src.from];
            State v = t[src.to];
            if (index_[u * n + v] >= 0) continue;
            GammaEdge next{u, v, src.level + 1, src.corank_letter, src.permutation_word};
            next.permutation_word.push(a);
            max_level_ = std::max(max_level_, next.level);
            index_[u * n + v] = static_cast<int>(edges_.size());
            edges_.push_back(std::move(next));
            queue.push_back(edges_.size() - 1);
        }
    }
}

const GammaEdge* GammaStratification::edge(State from, State to) const {
    if (from >= n_ || to >= n_) return nullptr;
    int i = index_[from * n_ + to];
    return i < 0 ? nullptr : &edges_[static_cast<std::size_t>(i)];
}

std::vector<std::pair<State, State>> GammaStratification::edges_at(std::size_t level) const {
    std::vector<std::pair<State, State>> out;
    for (const auto& e : edges_) {
        if (e.level <= level) out.emplace_back(e.from, e.to);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t GammaStratification::scc_count(std::size_t level) const {
    std::vector<std::vector<char>> reach(n_, std::vector<char>(n_, 0));
    std::vector<std::vector<State>> adj(n_);
    for (const auto& e : edges_) {
        if (e.level <= level) adj[e.from].push_back(e.to);
    }
    for (State s = 0; s < n_; ++s) {
        std::vector<State> stack{s};
        reach[s][s] = 1;
        while (!stack.empty()) {
            State u = stack.back();
            stack.pop_back();
            for (State v : adj[u]) {
                if (!reach[s][v]) {
                    reach[s][v] = 1;
                    stack.push_back(v);
                }
            }
        }
    }
    std::vector<char> assigned(n_, 0);
    std::size_t components = 0;
    for (State s = 0; s < n_; ++s) {
        if (assigned[s]) continue;
        ++components;
        for (State t = s; t < n_; ++t) {
            if (reach[s][t] && reach[t][s]) assigned[t] = 1;
        }
    }
    return components;
}

namespace {

struct ExtensionRun {
    Word word;
    std::vector<Word> extensions;
};

ExtensionRun run_extension(const Dfa& d, const GammaStratification& gamma, LetterIndex start) {
    const std::size_t n = d.size();
    const auto& x0 = d.letter(start).map;
    const State h = x0.duplicate_state();
    std::vector<char> in_r(n, 0);
    std::size_t r_size = 0;
    for (State q = 0; q < n; ++q) {
        if (x0[q] == h) {
            in_r[q] = 1;
            ++r_size;
        }
    }
    ExtensionRun run;
    run.word.push(start);
    while (r_size < n) {
        const GammaEdge* pick = nullptr;
        for (const auto& e : gamma.edges()) {
            if (in_r[e.from] || !in_r[e.to]) continue;
            if (!pick || e.level < pick->level ||
                (e.level == pick->level &&
                 std::make_pair(e.from, e.to) < std::make_pair(pick->from, pick->to))) {
                pick = &e;
            }
        }
        if (!pick) throw std::logic_error("extension: no edge leaves the current subset");
        Word u;
        u.push(pick->corank_letter).append(pick->permutation_word);
        // R <- R u^{-1}
        std::vector<char> grown(n, 0);
        std::size_t grown_size = 0;
        for (State q = 0; q < n; ++q) {
            State r = q;
            for (LetterIndex a : u.letters) r = d.letter(a).map[r];
            if (in_r[r]) {
                grown[q] = 1;
                ++grown_size;
            }
        }
        if (grown_size <= r_size) throw std::logic_error("extension: subset did not grow");
        in_r.swap(grown);
        r_size = grown_size;
        run.extensions.push_back(u);
        run.word = u + run.word;
    }
    return run;
}

}  // namespace

ResetResult extension_reset_word(const Dfa& d, ExtensionTrace* trace) {
    const std::size_t n = d.size();
    ResetResult out{Word{}, ResetMethod::Extension, false};
    if (n == 1) {
        out.verified = true;
        return out;
    }
    std::vector<LetterIndex> corank;
    for (LetterIndex a = 0; a < d.letter_count(); ++a) {
        if (d.letter(a).map.rank() + 1 == n) corank.push_back(a);
    }
    if (corank.empty()) {
        throw PreconditionFailed("extension: no letter of rank n-1");
    }
    auto perms = permutation_maps(d);
    if (!generates_symmetric_group(perms, n) && !is_two_transitive(perms, n)) {
        throw PreconditionFailed(
            "extension: permutation letters neither generate S_n nor act 2-transitively");
    }
    GammaStratification gamma(d);
    std::optional<ExtensionRun> best;
    LetterIndex best_start = 0;
    for (LetterIndex x : corank) {
        auto run = run_extension(d, gamma, x);
        if (!best || run.word.length() < best->word.length()) {
            best = std::move(run);
            best_start = x;
        }
    }
    out.word = std::move(best->word);
    out.verified = is_reset_word(d, out.word);
    if (trace) {
        trace->start_letter = best_start;
        trace->extensions = std::move(best->extensions);
    }
    return out;
}

// ------------------------------------------------------------------ cb rounds

ResetResult cb_reset_word(std::size_t n, std::size_t k, CbTrace* trace) {
    Dfa d = cb(n, k);  // validates n and k
    constexpr LetterIndex a = 0;
    constexpr LetterIndex b = 1;
    constexpr LetterIndex c = 2;
    ResetResult out{Word{}, ResetMethod::CbRounds, false};
    if (k == 1) {
        out.word.push(b);
        for (std::size_t i = 0; i + 2 < n; ++i) out.word.push(c).push(a).push(b);
        out.verified = is_reset_word(d, out.word);
        return out;
    }

    std::vector<char> in(n, 1);
    std::size_t size = n;
    auto left = [n](std::size_t i) { return (i + n - 1) % n; };
    auto right = [n](std::size_t i) { return (i + 1) % n; };
    auto isolated = [&](std::size_t i) { return in[i] && !in[left(i)] && !in[right(i)]; };
    auto isolated_count = [&] {
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) count += isolated(i) ? 1 : 0;
        return count;
    };
    auto apply = [&](LetterIndex letter) {
        const auto& t = d.letter(letter).map;
        std::vector<char> next(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (in[i]) next[t[static_cast<State>(i)]] = 1;
        }
        in.swap(next);
        size = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
        out.word.push(letter);
    };

    const std::size_t log2n = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
    const std::size_t step_limit = 4 * n * log2n;
    // q_1 -> index 0, q_k -> k-1, q_{k+1} -> k, q_{k+2} -> k+1 (cyclically)
    const std::size_t qk = k - 1;
    const std::size_t qk1 = k % n;
    const std::size_t qk2 = (k + 1) % n;

    while (size > 1) {
        std::size_t iso = isolated_count();
        CbRound round{iso <= 1 ? RoundKind::Merging : RoundKind::Pairing, size, 0, Word{}};
        std::size_t start = out.word.length();
        if (iso <= 1) {
            // (M): b when q_1, q_2 are both covered, otherwise a
            while (isolated_count() < size) {
                apply(in[0] && in[1] ? b : a);
                if (out.word.length() > step_limit) throw std::logic_error("cb: step limit");
            }
        } else if (iso == size) {
            // (P): c when q_{k+1} is covered and isolated, otherwise a
            while (isolated_count() > 1) {
                apply(in[qk1] && !in[qk] && !in[qk2] ? c : a);
                if (out.word.length() > step_limit) throw std::logic_error("cb: step limit");
            }
        } else {
            throw std::logic_error("cb: image is neither merge-ready nor fully isolated");
        }
        round.size_after = size;
        round.letters.letters.assign(out.word.letters.begin() + static_cast<std::ptrdiff_t>(start),
                                     out.word.letters.end());
        if (trace) trace->rounds.push_back(std::move(round));
    }
    out.verified = is_reset_word(d, out.word);
    return out;
}

// ------------------------------------------------------------------ potential

PotentialResult potential_lower_bound(const Dfa& d, const std::vector<std::int64_t>& weights,
                                      const StateSet& target) {
    const std::size_t n = d.size();
    if (n > potential_cap) {
        throw std::invalid_argument("potential verification is capped at " +
                                    std::to_string(potential_cap) + " states");
    }
    if (weights.size() != n) throw std::invalid_argument("potential: one weight per state");
    if (target.universe() != n) throw std::invalid_argument("potential: target size mismatch");
    if (std::any_of(weights.begin(), weights.end(), [](auto w) { return w < 0; })) {
        throw std::invalid_argument("potential: weights must be non-negative");
    }
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<std::int64_t> value(subsets, 0);
    for (std::uint64_t s = 1; s < subsets; ++s) {
        value[s] = value[s & (s - 1)] + weights[static_cast<std::size_t>(std::countr_zero(s))];
    }
    auto maps = mappers(d);
    for (std::uint64_t s = 1; s < subsets; ++s) {
        for (LetterIndex a = 0; a < maps.size(); ++a) {
            std::uint64_t t = maps[a](s);
            if (value[t] < value[s] - 1) {
                return PotentialCounterexample{StateSet(n, s), a, value[s], value[t]};
            }
        }
    }
    return PotentialBound{value[subsets - 1] - value[target.mask()]};
}

}  // namespace synchrokit

#pragma once

// Slow, obviously-correct reference computations used only by tests.

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "synchrokit/core.hpp"

namespace oracle {

using synchrokit::Dfa;
using synchrokit::State;
using synchrokit::Transformation;

inline std::vector<State> images(const Transformation& t) { return {t.images().begin(), t.images().end()}; }

inline std::vector<State> compose(const std::vector<State>& first, const std::vector<State>& second) {
    std::vector<State> out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
}

/// Size of the closure of the generators under composition, identity included.
inline std::size_t closure_size(const std::vector<Transformation>& gens, std::size_t n) {
    std::vector<State> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<State>(i);
    std::set<std::vector<State>> seen{id};
    std::queue<std::vector<State>> todo;
    todo.push(id);
    while (!todo.empty()) {
        auto x = todo.front();
        todo.pop();
        for (const auto& g : gens) {
            auto y = compose(x, images(g));
            if (seen.insert(y).second) todo.push(y);
        }
    }
    return seen.size();
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Reset threshold by breadth-first search over std::set subsets; -1 if none.
inline int reset_threshold(const Dfa& d) {
    std::set<State> all;
    for (State q = 0; q < d.size(); ++q) all.insert(q);
    if (all.size() == 1) return 0;
    std::map<std::set<State>, int> dist{{all, 0}};
    std::queue<std::set<State>> todo;
    todo.push(all);
    while (!todo.empty()) {
        auto s = todo.front();
        todo.pop();
        for (const auto& l : d.letters()) {
            std::set<State> t;
            for (State q : s) t.insert(l.map[q]);
            if (dist.count(t)) continue;
            dist[t] = dist[s] + 1;
            if (t.size() == 1) return dist[t];
            todo.push(t);
        }
    }
    return -1;
}

/// Shortest distance between unordered pairs under the given letters; -1 if
/// unreachable.
inline int pair_distance(const Dfa& d, const std::vector<synchrokit::LetterIndex>& letters, State a, State b,
                         State c, State e) {
    using P = std::pair<State, State>;
    auto norm = [](State x, State y) { return x < y ? P{x, y} : P{y, x}; };
    P from = norm(a, b);
    P to = norm(c, e);
    std::map<P, int> dist{{from, 0}};
    std::queue<P> todo;
    todo.push(from);
    while (!todo.empty()) {
        P p = todo.front();
        todo.pop();
        if (p == to) return dist[p];
        for (auto x : letters) {
            const auto& t = d.letter(x).map;
            P r = norm(t[p.first], t[p.second]);
            if (!dist.count(r)) {
                dist[r] = dist[p] + 1;
                todo.push(r);
            }
        }
    }
    return -1;
}

/// Random transformation on n points drawn from a simple LCG (tests only).
struct Lcg {
    std::uint64_t state;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

inline Transformation random_map(std::size_t n, Lcg& rng) {
    std::vector<State> t(n);
    for (auto& q : t) q = static_cast<State>(rng.below(n));
    return Transformation(t);
}

inline Transformation random_perm(std::size_t n, Lcg& rng) {
    std::vector<State> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<State>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
    return Transformation(p);
}

}  // namespace oracle

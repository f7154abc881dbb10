#include "synchrokit/pairgraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <thread>

#include "synchrokit/families.hpp"

namespace synchrokit {

StatePair make_pair_of(State i, State j) {
    if (i == j) throw std::invalid_argument("a pair needs two distinct states");
    return i < j ? StatePair{i, j} : StatePair{j, i};
}

// ------------------------------------------------------------------ PairDigraph

PairDigraph::PairDigraph(const Dfa& d) : n_(d.size()), letters_(d.permutation_letters()) {
    if (n_ < 2) throw std::invalid_argument("pair digraph needs at least two states");
    if (letters_.empty()) throw std::invalid_argument("pair digraph needs a permutation letter");
    for (LetterIndex a : letters_) names_.push_back(d.letter(a).name);
    for (State i = 0; i < n_; ++i) {
        for (State j = i + 1; j < n_; ++j) pairs_.push_back({i, j});
    }
    next_.resize(pairs_.size() * letters_.size());
    for (std::size_t v = 0; v < pairs_.size(); ++v) {
        for (std::size_t a = 0; a < letters_.size(); ++a) {
            const auto& t = d.letter(letters_[a]).map;
            next_[v * letters_.size() + a] = vertex(make_pair_of(t[pairs_[v].first],
                                                                 t[pairs_[v].second]));
        }
    }
}

std::size_t PairDigraph::vertex(StatePair p) const {
    if (p.first >= p.second || p.second >= n_) {
        throw std::invalid_argument("invalid pair (" + std::to_string(p.first) + ", " +
                                    std::to_string(p.second) + ")");
    }
    const std::size_t i = p.first;
    return i * n_ + p.second - (i + 1) * (i + 2) / 2;
}

Word PairDigraph::to_dfa_word(const std::vector<std::size_t>& letters) const {
    Word w;
    for (auto a : letters) w.push(letters_.at(a));
    return w;
}

// ------------------------------------------------------------------ distances

std::vector<int> distances_from(const PairDigraph& g, std::size_t source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<std::size_t> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t u = queue[head];
        for (std::size_t a = 0; a < g.letter_count(); ++a) {
            std::size_t v = g.successor(u, a);
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::optional<PairPath> pair_distance(const PairDigraph& g, StatePair from, StatePair to) {
    const std::size_t s = g.vertex(from);
    const std::size_t t = g.vertex(to);
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(g.vertex_count(), none);
    std::vector<std::size_t> via(g.vertex_count(), 0);
    std::vector<std::size_t> queue{s};
    parent[s] = s;
    // FIFO order with letters in index order gives the lexicographically
    // least word among the shortest ones.
    for (std::size_t head = 0; head < queue.size() && parent[t] == none; ++head) {
        std::size_t u = queue[head];
        for (std::size_t a = 0; a < g.letter_count(); ++a) {
            std::size_t v = g.successor(u, a);
            if (parent[v] == none) {
                parent[v] = u;
                via[v] = a;
                queue.push_back(v);
            }
        }
    }
    if (parent[t] == none) return std::nullopt;
    std::vector<std::size_t> letters;
    for (std::size_t cur = t; cur != s; cur = parent[cur]) letters.push_back(via[cur]);
    std::reverse(letters.begin(), letters.end());
    return PairPath{letters.size(), g.to_dfa_word(letters)};
}

DiameterResult diameter(const PairDigraph& g, unsigned workers) {
    const std::size_t vertices = g.vertex_count();
    struct SourceSummary {
        int eccentricity = 0;
        std::vector<std::size_t> farthest;
        std::optional<std::size_t> unreachable;
    };
    std::vector<SourceSummary> summary(vertices);
    auto work = [&](std::size_t first) {
        for (std::size_t s = first; s < vertices; s += std::max(1U, workers)) {
            auto dist = distances_from(g, s);
            SourceSummary& out = summary[s];
            for (std::size_t t = 0; t < vertices; ++t) {
                if (dist[t] < 0) {
                    if (!out.unreachable) out.unreachable = t;
                    continue;
                }
                if (dist[t] > out.eccentricity) {
                    out.eccentricity = dist[t];
                    out.farthest.clear();
                }
                if (dist[t] == out.eccentricity) out.farthest.push_back(t);
            }
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    DiameterResult result{true, 0, {}};
    for (std::size_t s = 0; s < vertices; ++s) {
        if (summary[s].unreachable) {
            result.strongly_connected = false;
            result.diameter = 0;
            result.witnesses = {{g.pair(s), g.pair(*summary[s].unreachable)}};
            return result;
        }
    }
    for (std::size_t s = 0; s < vertices; ++s) {
        result.diameter = std::max(result.diameter, static_cast<std::size_t>(summary[s].eccentricity));
    }
    for (std::size_t s = 0; s < vertices; ++s) {
        if (static_cast<std::size_t>(summary[s].eccentricity) != result.diameter) continue;
        for (auto t : summary[s].farthest) result.witnesses.emplace_back(g.pair(s), g.pair(t));
    }
    return result;
}

// ------------------------------------------------------------------ certificate

PairCertificate::PairCertificate(std::size_t n, std::vector<long long> values)
    : n_(n), values_(std::move(values)) {
    if (n < 2) throw std::invalid_argument("certificate needs at least two states");
    if (values_.size() != n * (n - 1) / 2) {
        throw std::invalid_argument("certificate needs one value per unordered pair");
    }
    for (auto v : values_) {
        if (v < 0) throw std::invalid_argument("certificate values must be non-negative");
    }
}

long long PairCertificate::value(StatePair p) const {
    if (p.first >= p.second || p.second >= n_) throw std::invalid_argument("invalid pair");
    const std::size_t i = p.first;
    return values_[i * n_ + p.second - (i + 1) * (i + 2) / 2];
}

void PairCertificate::set(StatePair p, long long v) {
    if (p.first >= p.second || p.second >= n_) throw std::invalid_argument("invalid pair");
    if (v < 0) throw std::invalid_argument("certificate values must be non-negative");
    const std::size_t i = p.first;
    values_[i * n_ + p.second - (i + 1) * (i + 2) / 2] = v;
}

namespace {

// Vertex values of the pair digraph of F_7, as 1-based (i, j, N).
constexpr long long f7_values[][3] = {
    {2, 4, 15}, {1, 3, 14}, {5, 6, 13}, {6, 7, 12}, {1, 7, 11}, {2, 5, 10}, {3, 7, 10},
    {4, 5, 9},  {5, 7, 11}, {2, 3, 9},  {3, 4, 8},  {1, 4, 7},  {1, 2, 6},  {2, 6, 5},
    {1, 6, 6},  {4, 6, 7},  {3, 6, 4},  {1, 5, 3},  {2, 7, 2},  {3, 5, 1},  {4, 7, 0},
};

// Closed-form N for n = 2k+5 with k odd, k >= 3. States are 1-based. The
// first list covers pairs touching q_1..q_4 or q_{2k+4}, q_{2k+5}; the second
// covers pairs of "middle" states q_{4m+r}, 5 <= 4m+r <= 2k+3. Each clause
// returns nullopt when the pair does not have its shape.
class NFormula {
public:
    explicit NFormula(long long k) : k_(k), n1_((k + 3) / 2), n2_((k + 4) * (k - 1)) {}

    long long operator()(long long i, long long j) const {
        int matches = 0;
        long long value = 0;
        for (const auto& clause : clauses_) {
            if (auto v = clause(i, j)) {
                ++matches;
                value = *v;
            }
        }
        if (matches != 1) {
            throw std::logic_error("N(q" + std::to_string(i) + "q" + std::to_string(j) +
                                   ") matched " + std::to_string(matches) + " clauses");
        }
        return value;
    }

private:
    using Clause = std::function<std::optional<long long>(long long, long long)>;

    struct Mid {
        long long m;
        long long r;
    };

    std::optional<Mid> mid(long long s) const {
        if (s < 5 || s > 2 * k_ + 3) return std::nullopt;
        long long m = (s - 1) / 4;
        return Mid{m, s - 4 * m};
    }

    // (fixed central state, middle state with residue r)
    Clause central_mid(long long c, long long r, std::function<long long(long long)> f) const {
        return [this, c, r, f](long long i, long long j) -> std::optional<long long> {
            auto x = mid(j);
            if (i != c || !x || x->r != r) return std::nullopt;
            return f(x->m);
        };
    }

    // (middle state with residue r, fixed extreme state)
    Clause mid_extreme(long long r, long long e, std::function<long long(long long)> f) const {
        return [this, r, e, f](long long i, long long j) -> std::optional<long long> {
            auto x = mid(i);
            if (j != e || !x || x->r != r) return std::nullopt;
            return f(x->m);
        };
    }

    Clause fixed(long long a, long long b, long long v) const {
        return [a, b, v](long long i, long long j) -> std::optional<long long> {
            if (i != a || j != b) return std::nullopt;
            return v;
        };
    }

    // (middle residue r1 with parameter m', middle residue r2 with parameter m)
    Clause mid_mid(long long r1, long long r2,
                   std::function<long long(long long, long long)> f) const {
        return [this, r1, r2, f](long long i, long long j) -> std::optional<long long> {
            auto x = mid(i);
            auto y = mid(j);
            if (!x || !y || x->r != r1 || y->r != r2) return std::nullopt;
            return f(x->m, y->m);
        };
    }

    long long k_;
    long long n1_;
    long long n2_;

    std::vector<Clause> clauses_ = build();

    std::vector<Clause> build() const {
        const long long k = k_;
        const long long N1 = n1_;
        const long long N2 = n2_;
        const long long e4 = 2 * k + 4;
        const long long e5 = 2 * k + 5;
        std::vector<Clause> c;

        // ---- first list
        c.push_back(fixed(1, 2, N1 + N2 + 2 * k + 1));
        c.push_back(fixed(1, 3, N1 + N2 + 4 * k + 7));
        c.push_back(fixed(1, 4, N1 + N2 + 2 * k + 2));
        c.push_back(central_mid(1, 1, [=](long long m) {
            return m == N1 - 1 ? (k + 3) / 2 : N1 + (k + 4) * (k - 2 * m - 1) + 2 * k + 3;
        }));
        c.push_back(central_mid(1, 2, [=](long long m) {
            return N1 + (k + 4) * (k - 2 * m - 1) + 2 * k - 2 * m + 2;
        }));
        c.push_back(central_mid(1, 3, [=](long long m) {
            return m == 1 ? N1 + N2 + 2 * k + 6 : N1 + (k + 4) * (k - 2 * m + 1) + 2 * k + 8;
        }));
        c.push_back(central_mid(1, 4, [=](long long m) {
            return N1 + (k + 4) * (k - 2 * m + 1) + 2 * k - 2 * m + 3;
        }));
        c.push_back(fixed(1, e4, N1 + k + 2));
        c.push_back(fixed(1, e5, N1 + 2 * k + 8));

        c.push_back(fixed(2, 3, N1 + N2 + 2 * k + 4));
        c.push_back(fixed(2, 4, N1 + N2 + 4 * k + 8));
        c.push_back(central_mid(2, 1, [=](long long m) {
            return m == 1 ? N1 + N2 + 2 * k + 5 : N1 + (k + 4) * (k - 2 * m + 1) + 2 * k + 7;
        }));
        c.push_back(central_mid(2, 2, [=](long long m) {
            return N1 + (k + 4) * (k - 2 * m + 1) + 2 * k - 2 * m + 2;
        }));
        c.push_back(central_mid(2, 3, [=](long long m) {
            return N1 + (k + 4) * (k - 2 * m - 1) + 2 * k + 6;
        }));
        c.push_back(central_mid(2, 4, [=](long long m) {
            return N1 + (k + 4) * (k - 2 * m - 1) + 2 * k - 2 * m + 1;
        }));
        c.push_back(fixed(2, e4, N1 + k + 1));
        c.push_back(fixed(2, e5, N1 - 1));

        c.push_back(fixed(3, 4, N1 + N2 + 2 * k + 3));
        c.push_back(central_mid(3, 1, [=](long long m) {
            return m == N1 - 1 ? (k - 1) / 2 : N1 + (k + 4) * (k - 2 * m - 1) + 2 * k + 5;
        }));
        c.push_back(central_mid(3, 2, [=](long long m) {
            return N1 + (k + 4) * (k - 2 * m - 1) + 2 * k - 2 * m + 4;
        }));
        c.push_back(central_mid(3, 3, [=](long long m) {
            return m == 1 ? N1 + N2 + 2 * k + 5 : N1 + (k + 4) * (k - 2 * m + 1) + 2 * k + 6;
        }));
        c.push_back(central_mid(3, 4, [=](long long m) {
            return N1 + (k + 4) * (k - 2 * m + 1) + 2 * k - 2 * m + 1;
        }));
        c.push_back(fixed(3, e4, N1 + k));
        c.push_back(fixed(3, e5, N1 + 2 * k + 6));

        c.push_back(central_mid(4, 1, [=](long long m) {
            return m == 1 ? N1 + N2 + 2 * k + 4 : N1 + (k + 4) * (k - 2 * m + 1) + 2 * k + 5;
        }));
        c.push_back(central_mid(4, 2, [=](long long m) {
            return N1 + (k + 4) * (k - 2 * m + 1) + 2 * k - 2 * m + 4;
        }));
        c.push_back(central_mid(4, 3, [=](long long m) {
            return N1 + (k + 4) * (k - 2 * m - 1) + 2 * k + 4;
        }));
        c.push_back(central_mid(4, 4, [=](long long m) {
            return N1 + (k + 4) * (k - 2 * m - 1) + 2 * k - 2 * m + 3;
        }));
        c.push_back(fixed(4, e4, N1 + k + 3));
        c.push_back(fixed(4, e5, N1 + 1));

        c.push_back(mid_extreme(1, e4, [=](long long mp) {
            return 2 * mp == k + 1 ? N1 + N2 + 3 * k + 7 : N1 + (k + 4) * (2 * mp) + k + 1;
        }));
        c.push_back(mid_extreme(1, e5, [=](long long mp) {
            return mp == N1 - 1 ? N1 + (k + 4) * (2 * mp - 2) + 2 * k + 4 + 2 * mp
                                : N1 + (k + 4) * (2 * mp - 2) + 2 * k + 5 + 2 * mp;
        }));
        c.push_back(mid_extreme(2, e4, [=](long long mp) {
            return N1 + (k + 4) * 2 * mp + k + 1 + 4 * mp;
        }));
        c.push_back(mid_extreme(2, e5, [=](long long mp) {
            if (mp == 1) return N1 + 2 * k + 9;
            if (2 * mp == k + 1) return N1 + N2 + 2 * k + mp + 8;
            return N1 + (k + 4) * (2 * mp - 2) + 2 * k + 2 * mp + 7;
        }));
        c.push_back(mid_extreme(3, e4, [=](long long mp) {
            return N1 + (k + 4) * (2 * mp) + k;
        }));
        c.push_back(mid_extreme(3, e5, [=](long long mp) {
            return 2 * mp == k - 1 ? N1 + (k + 4) * (2 * mp) + 2 * k + 2 * mp + 5
                                   : N1 + (k + 4) * (2 * mp) + 2 * k + 2 * mp + 6;
        }));
        c.push_back(mid_extreme(4, e4, [=](long long mp) {
            return N1 + (k + 4) * 2 * mp + k + 2 + 4 * mp;
        }));
        c.push_back(mid_extreme(4, e5, [=](long long mp) {
            return 2 * mp == k - 1 ? N1 + N2 + 3 * k + 5
                                   : N1 + (k + 4) * (2 * mp) + 2 * k + 2 * mp + 8;
        }));
        c.push_back(fixed(e4, e5, N1 + N2 + 3 * k + 6));

        // ---- second list; M = m + m', M' = m - m'
        c.push_back(mid_mid(1, 1, [=](long long mp, long long m) {
            return m == mp + 1 ? N1 + N2 + 2 * k + 2 * mp + 4
                               : N1 + (k + 4) * (k - 2 * (m - mp) + 1) + 2 * k + 2 * mp + 5;
        }));
        c.push_back(mid_mid(1, 2, [=](long long mp, long long m) {
            return mp == m ? N1 + N2 + 4 * k + 8 - 2 * m
                           : N1 + (k + 4) * (k - 2 * (m - mp) + 1) + 2 * k - 2 * m + 2;
        }));
        c.push_back(mid_mid(1, 3, [=](long long mp, long long m) {
            long long M = m + mp;
            if (2 * M < k + 1) return N1 + (k + 4) * (k - 2 * M - 1) + 2 * k + 2 * mp + 4;
            if (2 * M == k + 1) return (4 * m - k - 1) / 2;
            return N1 + (k + 4) * (2 * M - k - 3) + 2 * k + 2 * mp + 5;
        }));
        c.push_back(mid_mid(1, 4, [=](long long mp, long long m) {
            long long M = m + mp;
            if (2 * M < k + 1) return N1 + (k + 4) * (k - 2 * M - 1) + 2 * k - 2 * m + 3;
            if (2 * M == k + 1) return N1 + 2 * m;
            return N1 + (k + 4) * (2 * M - k - 3) + 2 * k + 2 * m + 8;
        }));

        c.push_back(mid_mid(2, 1, [=](long long mp, long long m) {
            return mp == m - 1 ? N1 + N2 + 2 * k + 2 * mp + 5
                               : N1 + (k + 4) * (k - 2 * (m - mp) + 1) + 2 * k + 2 * mp + 7;
        }));
        c.push_back(mid_mid(2, 2, [=](long long mp, long long m) {
            return N1 + (k + 4) * (k - 2 * (m - mp) + 1) + 2 * k - 2 * m + 4 * mp + 2;
        }));
        c.push_back(mid_mid(2, 3, [=](long long mp, long long m) {
            long long M = m + mp;
            if (2 * M < k + 1) return N1 + (k + 4) * (k - 2 * M - 1) + 2 * k - 2 * mp + 4;
            if (2 * M == k + 1) return N1 + 2 * mp - 1;
            return N1 + (k + 4) * (2 * M - k - 3) + 2 * k + 2 * mp + 7;
        }));
        c.push_back(mid_mid(2, 4, [=](long long mp, long long m) {
            long long M = m + mp;
            if (2 * M < k + 1) return N1 + (k + 4) * (k - 2 * M - 1) + 2 * k - 2 * m + 1;
            if (2 * M == k + 1) return N1 + k + 2 * mp + 1;
            return N1 + (k + 4) * (2 * M - k - 1) + 4 * mp + 2 * m;
        }));

        c.push_back(mid_mid(3, 1, [=](long long mp, long long m) {
            long long M = m + mp;
            if (2 * M < k + 1) return N1 + (k + 4) * (k - 2 * M - 1) + 2 * k + 2 * mp + 5;
            if (2 * M == k + 1) return (4 * m - k - 3) / 2;
            return N1 + (k + 4) * (2 * M - k - 3) + 2 * k + 2 * mp + 6;
        }));
        c.push_back(mid_mid(3, 2, [=](long long mp, long long m) {
            long long M = m + mp;
            if (2 * M < k + 1) return N1 + (k + 4) * (k - 2 * M - 1) + 2 * k - 2 * m + 4;
            if (2 * M == k + 1) return N1 + 2 * m - 1;
            return N1 + (k + 4) * (2 * M - k - 3) + 2 * k + 2 * m + 7;
        }));
        c.push_back(mid_mid(3, 3, [=](long long mp, long long m) {
            return m == mp + 1 ? N1 + (k + 4) * (k - 2 * (m - mp) + 1) + 2 * k + 2 * m + 3
                               : N1 + (k + 4) * (k - 2 * (m - mp) + 1) + 2 * k + 2 * mp + 6;
        }));
        c.push_back(mid_mid(3, 4, [=](long long mp, long long m) {
            return mp == m ? N1 + N2 + 4 * k + 7 - 2 * m
                           : N1 + (k + 4) * (k - 2 * (m - mp) + 1) + 2 * k - 2 * m + 1;
        }));

        c.push_back(mid_mid(4, 1, [=](long long mp, long long m) {
            long long M = m + mp;
            if (2 * M < k + 1) return N1 + (k + 4) * (k - 2 * M - 1) + 2 * k - 2 * mp + 3;
            if (2 * M == k + 1) return N1 + 2 * mp;
            return N1 + (k + 4) * (2 * M - k - 3) + 2 * k + 2 * mp + 8;
        }));
        c.push_back(mid_mid(4, 2, [=](long long mp, long long m) {
            long long M = m + mp;
            if (2 * M < k + 1) return N1 + (k + 4) * (k - 2 * M - 1) + 2 * k - 2 * m + 2;
            if (2 * M == k + 1) return N1 + k + 2 * mp + 2;
            return N1 + (k + 4) * (2 * M - k - 1) + 2 * m + 4 * mp + 1;
        }));
        c.push_back(mid_mid(4, 3, [=](long long mp, long long m) {
            return m == mp + 1 ? N1 + N2 + 2 * k + 2 * mp + 6
                               : N1 + (k + 4) * (k - 2 * (m - mp) + 1) + 2 * k + 2 * mp + 8;
        }));
        c.push_back(mid_mid(4, 4, [=](long long mp, long long m) {
            return N1 + (k + 4) * (k - 2 * (m - mp) + 1) + 2 * k - 2 * m + 4 * mp + 3;
        }));
        return c;
    }
};

}  // namespace

PairCertificate n_certificate(std::size_t n) {
    const std::size_t pairs = n * (n - 1) / 2;
    if (n == 7) {
        PairCertificate c(7, std::vector<long long>(pairs, 0));
        std::vector<char> seen(pairs, 0);
        for (const auto& row : f7_values) {
            StatePair p{static_cast<State>(row[0] - 1), static_cast<State>(row[1] - 1)};
            c.set(p, row[2]);
            seen[static_cast<std::size_t>(p.first) * 7 + p.second - (p.first + 1) * (p.first + 2) / 2] = 1;
        }
        if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(pairs)) {
            throw std::logic_error("F_7 table does not cover every pair");
        }
        return c;
    }
    if (n < 11 || n % 4 != 3) {
        throw std::invalid_argument("N certificate is available for n = 7 and n = 3 (mod 4), n >= 11");
    }
    NFormula formula(static_cast<long long>(n - 5) / 2);
    std::vector<long long> values;
    values.reserve(pairs);
    for (long long i = 1; i <= static_cast<long long>(n); ++i) {
        for (long long j = i + 1; j <= static_cast<long long>(n); ++j) values.push_back(formula(i, j));
    }
    return PairCertificate(n, std::move(values));
}

std::optional<CertificateViolation> verify_certificate(const PairDigraph& g,
                                                       const PairCertificate& c) {
    if (g.states() != c.states()) throw std::invalid_argument("certificate size mismatch");
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        long long before = c.value(g.pair(v));
        for (std::size_t a = 0; a < g.letter_count(); ++a) {
            std::size_t u = g.successor(v, a);
            long long after = c.value(g.pair(u));
            if (after < before - 1) return CertificateViolation{g.pair(v), g.pair(u), a, before, after};
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ explicit word

namespace {

constexpr LetterIndex letter_a = 0;
constexpr LetterIndex letter_b = 1;

Word letters_of(const std::string& s) {
    Word w;
    for (char ch : s) w.push(ch == 'a' ? letter_a : letter_b);
    return w;
}

// b a b a ... of the given length; (ba)^e b when the length is 2e + 1.
Word alternating(std::size_t length) {
    Word w;
    for (std::size_t i = 0; i < length; ++i) w.push(i % 2 == 0 ? letter_b : letter_a);
    return w;
}

std::vector<Word> table2_factors(std::size_t n) {
    if (n < 11 || n % 4 != 3) {
        throw std::invalid_argument("table2 word is defined for n = 3 (mod 4), n >= 11");
    }
    const std::size_t k = (n - 5) / 2;
    std::vector<Word> factors{letters_of("a"), alternating(2 * k + 1), letters_of("abaaaba"),
                              alternating(2 * k - 1)};
    for (std::size_t j = 1; j <= (k - 1) / 2; ++j) {
        factors.push_back(letters_of("aaaba"));
        factors.push_back(alternating(2 * j - 1));
        factors.push_back(letters_of("aaaba"));
        factors.push_back(alternating(2 * k - 2 * j - 1));
    }
    factors.push_back(letters_of("aa"));
    factors.push_back(alternating((k - 1) / 2));
    return factors;
}

}  // namespace

std::vector<Table2Segment> table2_segments(std::size_t n) {
    auto factors = table2_factors(n);
    Dfa d = f(n);
    StatePair cur{1, 3};  // q_2 q_4
    std::vector<Table2Segment> out;
    for (auto& factor : factors) {
        State x = cur.first;
        State y = cur.second;
        for (LetterIndex a : factor.letters) {
            x = d.letter(a).map[x];
            y = d.letter(a).map[y];
        }
        StatePair end = make_pair_of(x, y);
        out.push_back({cur, end, std::move(factor)});
        cur = end;
    }
    return out;
}

Word table2_word(std::size_t n) {
    Word w;
    for (const auto& f : table2_factors(n)) w.append(f);
    return w;
}

}  // namespace synchrokit

#pragma once

// Pair digraphs of permutation letters: vertices are unordered pairs {i, j},
// each letter maps {i, j} to {i.a, j.a}. Exact distances and diameters, the
// pair potential N certifying distance lower bounds for F_n, and the explicit
// word that meets that bound.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synchrokit/core.hpp"

namespace synchrokit {

struct StatePair {
    State first;
    State second;

    friend bool operator==(const StatePair&, const StatePair&) = default;
    friend auto operator<=>(const StatePair&, const StatePair&) = default;
};

/// Normalises to first < second.
StatePair make_pair_of(State i, State j);

class PairDigraph {
public:
    /// Uses only the permutation letters of d.
    explicit PairDigraph(const Dfa& d);

    std::size_t states() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return pairs_.size(); }
    std::size_t letter_count() const noexcept { return letters_.size(); }
    /// Index into the original Dfa of each letter used here.
    const std::vector<LetterIndex>& letters() const noexcept { return letters_; }
    const std::vector<std::string>& letter_names() const noexcept { return names_; }

    /// Row-major index over the strict upper triangle: i*n + j - (i+1)(i+2)/2.
    std::size_t vertex(StatePair p) const;
    StatePair pair(std::size_t v) const { return pairs_.at(v); }
    std::size_t successor(std::size_t v, std::size_t letter) const {
        return next_[v * letters_.size() + letter];
    }

    /// Word in the digraph's letter numbering, mapped back to Dfa indices.
    Word to_dfa_word(const std::vector<std::size_t>& letters) const;

private:
    std::size_t n_;
    std::vector<LetterIndex> letters_;
    std::vector<std::string> names_;
    std::vector<StatePair> pairs_;
    std::vector<std::size_t> next_;
};

struct PairPath {
    std::size_t length;
    Word word;  // Dfa letter indices; lexicographically least shortest
};

/// nullopt when `to` is unreachable from `from`.
std::optional<PairPath> pair_distance(const PairDigraph& g, StatePair from, StatePair to);

/// Shortest distances from one vertex (-1 = unreachable).
std::vector<int> distances_from(const PairDigraph& g, std::size_t source);

struct DiameterResult {
    bool strongly_connected;
    std::size_t diameter;  // valid when strongly_connected
    /// All ordered vertex pairs attaining the diameter, sorted; when not
    /// strongly connected, the first unreachable (from, to) pair.
    std::vector<std::pair<StatePair, StatePair>> witnesses;
};

/// All-sources BFS, split over `workers` threads; the result does not
/// depend on the worker count.
DiameterResult diameter(const PairDigraph& g, unsigned workers = 1);

// ------------------------------------------------------------------ certificate

class PairCertificate {
public:
    PairCertificate(std::size_t n, std::vector<long long> values);

    std::size_t states() const noexcept { return n_; }
    long long value(StatePair p) const;
    long long value(State i, State j) const { return value(make_pair_of(i, j)); }
    void set(StatePair p, long long v);
    const std::vector<long long>& values() const noexcept { return values_; }

private:
    std::size_t n_;
    std::vector<long long> values_;
};

/// The potential N for F_n: n = 7 from the published vertex values, and any
/// n > 7 with n = 3 (mod 4) from the closed-form lists.
PairCertificate n_certificate(std::size_t n);

struct CertificateViolation {
    StatePair from;
    StatePair to;
    std::size_t letter;  // pair-digraph letter number
    long long before;
    long long after;
};

/// Checks N(u.a) >= N(u) - 1 on every edge; nullopt means valid.
std::optional<CertificateViolation> verify_certificate(const PairDigraph& g,
                                                       const PairCertificate& c);

/// The explicit word taking q_2q_4 to q_{k+2}q_{k+4} in F_n, k = (n-5)/2,
/// for n = 3 (mod 4), n >= 11. Letter indices refer to f(n) (a = 0, b = 1).
Word table2_word(std::size_t n);

struct Table2Segment {
    StatePair start;
    StatePair end;
    Word factor;
};

/// The word split into its factors, with the traced start and end pairs.
std::vector<Table2Segment> table2_segments(std::size_t n);

}  // namespace synchrokit

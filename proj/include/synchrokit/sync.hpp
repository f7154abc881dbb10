#pragma once

// Exact reset thresholds, constructive reset words, and the subset-potential
// lower-bound verifier.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "synchrokit/core.hpp"

namespace synchrokit {

class NotSynchronizing : public std::domain_error {
public:
    NotSynchronizing() : std::domain_error("automaton is not synchronizing") {}
};

/// A synthesizer's precondition does not hold for the given automaton.
class PreconditionFailed : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class ResetMethod { ExactBfs, Pairchase, Extension, CbRounds };

std::string method_name(ResetMethod m);

struct ResetResult {
    Word word;
    ResetMethod method;
    bool verified = false;

    std::size_t length() const noexcept { return word.length(); }
};

// ------------------------------------------------------------------ exact

inline constexpr std::size_t default_exact_cap = 25;

struct ExactResult {
    std::size_t reset_threshold;
    Word witness;  // lexicographically least among the shortest
};

/// Breadth-first search over the subsets reachable from Q. Returns nullopt
/// when no singleton is reachable. Throws std::invalid_argument above cap.
std::optional<ExactResult> reset_threshold_exact(const Dfa& d,
                                                 std::size_t cap = default_exact_cap);

/// Same search without witness bookkeeping, for inner loops. -1 when the
/// automaton is not synchronizing.
int reset_threshold_value(const Dfa& d, std::size_t cap = default_exact_cap);

/// Every pair of states can be merged (pair automaton reachability).
bool is_synchronizing(const Dfa& d);

// ------------------------------------------------------------------ synthesizers

ResetResult exact_reset_word(const Dfa& d, std::size_t cap = default_exact_cap);

/// Greedy pair merging: repeatedly take the pair of the current image that
/// has the shortest merging word (exact BFS on the pair automaton, all
/// letters) and apply that word.
ResetResult pairchase_reset_word(const Dfa& d);

struct GammaEdge {
    State from;
    State to;
    std::size_t level;          // length of the shortest permutation word
    LetterIndex corank_letter;  // the rank n-1 letter x seeding the edge
    Word permutation_word;      // w with (excl(x).w, dupl(x).w) = (from, to)
};

/// Edges (excl(x).w, dupl(x).w) over rank n-1 letters x and permutation words
/// w, each with its lowest level. Seeds use every rank n-1 letter.
class GammaStratification {
public:
    explicit GammaStratification(const Dfa& d);

    std::size_t states() const noexcept { return n_; }
    const std::vector<GammaEdge>& edges() const noexcept { return edges_; }
    /// Edge for the ordered pair, if it occurs at any level.
    const GammaEdge* edge(State from, State to) const;
    /// Edges of Γ_i (level <= i).
    std::vector<std::pair<State, State>> edges_at(std::size_t level) const;
    std::size_t scc_count(std::size_t level) const;
    bool strongly_connected(std::size_t level) const { return scc_count(level) == 1; }
    std::size_t max_level() const noexcept { return max_level_; }

private:
    std::size_t n_;
    std::vector<GammaEdge> edges_;
    std::vector<int> index_;  // from * n + to -> position in edges_, or -1
    std::size_t max_level_ = 0;
};

struct ExtensionTrace {
    LetterIndex start_letter;
    std::vector<Word> extensions;  // u_1, u_2, ... in the order they were found
};

/// Chained subset extensions ending at Q. Requires a rank n-1 letter and a
/// permutation group that is S_n or at least 2-transitive.
ResetResult extension_reset_word(const Dfa& d, ExtensionTrace* trace = nullptr);

enum class RoundKind { Merging, Pairing };

struct CbRound {
    RoundKind kind;
    std::size_t size_before;
    std::size_t size_after;
    Word letters;
};

struct CbTrace {
    std::vector<CbRound> rounds;
};

/// Reset word for C̄B_{n,k} by alternating merging and pairing rounds.
/// For k = 1 the closed form b(cab)^{n-2} is returned.
ResetResult cb_reset_word(std::size_t n, std::size_t k, CbTrace* trace = nullptr);

// ------------------------------------------------------------------ potential

inline constexpr std::size_t potential_cap = 20;

struct PotentialBound {
    std::int64_t bound;  // f(Q) - f(target)
};

struct PotentialCounterexample {
    StateSet subset;
    LetterIndex letter;
    std::int64_t before;
    std::int64_t after;
};

using PotentialResult = std::variant<PotentialBound, PotentialCounterexample>;

/// Checks f(S.a) >= f(S) - 1 for every non-empty S and letter a, with
/// f(S) = sum of weights over S. When it holds, any word mapping Q into
/// target has length at least f(Q) - f(target).
PotentialResult potential_lower_bound(const Dfa& d, const std::vector<std::int64_t>& weights,
                                      const StateSet& target);

}  // namespace synchrokit

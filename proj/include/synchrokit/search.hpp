#pragma once

// Exhaustive and random experiments: largest reset thresholds over
// {two permutations generating S_n, one rank n-1 letter}, reset thresholds of
// random such automata, and diameters of random or all permutation-pair
// digraphs. Output is JSON lines, byte-identical for identical configs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "synchrokit/core.hpp"

namespace synchrokit {

/// Smallest representative under state relabeling and reordering of letters
/// of equal rank. Letter names travel with their maps; state labels reset.
Dfa canonical_form(const Dfa& d);

enum class SearchMode { Exhaustive, Random };

std::string mode_name(SearchMode m);
SearchMode parse_mode(const std::string& name);

inline constexpr std::size_t exhaustive_rt_cap = 7;
inline constexpr std::size_t exhaustive_pair_cap = 9;
inline constexpr int search_format_version = 1;

struct SearchConfig {
    std::size_t n = 0;
    SearchMode mode = SearchMode::Exhaustive;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string output_path;         // empty: no file
    bool allow_large = false;        // lift the exhaustive caps
    bool sample_corank_letter = false;

    nlohmann::json to_json() const;
};

struct SearchRecord {
    Dfa dfa;          // canonical form
    std::size_t rt;
    Word witness;     // reset word of length rt
    std::uint64_t timestamp;  // index of the work unit that produced it
    SearchConfig config;

    nlohmann::json to_json() const;
    static SearchRecord from_json(const nlohmann::json& j);
    /// The witness maps Q to a singleton and has length rt.
    bool verify() const;
};

struct ExhaustiveResult {
    std::size_t max_rt;
    SearchRecord witness;
    std::vector<SearchRecord> records;  // each new maximum, in search order
    std::size_t units;
};

/// Largest reset threshold over all (p1, p2, t) with p1, p2 generating S_n and
/// rank(t) = n-1. Throws std::invalid_argument when n exceeds the cap and
/// allow_large is not set. With an output path, an existing partial run for
/// the same config is resumed.
ExhaustiveResult max_reset_threshold_exhaustive(const SearchConfig& cfg);
ExhaustiveResult max_reset_threshold_exhaustive(std::size_t n);

struct RtSummary {
    std::size_t trials = 0;
    std::size_t synchronizing = 0;
    std::size_t max = 0;
    double mean = 0;
    std::size_t p99 = 0;
    double fraction_le_1 = 0;  // rt <= 1 * n log2 n
    double fraction_le_2 = 0;
    double fraction_le_4 = 0;
    bool exact = true;         // false: pairchase lengths above the exact cap
    std::vector<long long> values;  // per trial, -1 if not synchronizing

    nlohmann::json to_json() const;
};

/// Random permutation pairs plus a rank n-1 letter (merge q1, q2 -> q1 unless
/// sample_corank_letter), exact rt per trial.
RtSummary random_rt_experiment(const SearchConfig& cfg);

struct DiameterSummary {
    std::size_t samples = 0;
    std::size_t strongly_connected = 0;
    std::size_t not_strongly_connected = 0;
    std::size_t max_diameter = 0;
    double mean_diameter = 0;  // over strongly connected samples
    std::optional<std::pair<Transformation, Transformation>> argmax;  // first attaining pair

    nlohmann::json to_json() const;
};

/// Random mode samples uniform pairs; exhaustive mode fixes p1 to one
/// permutation per cycle type and lets p2 run over S_n.
DiameterSummary random_pair_diameter_experiment(const SearchConfig& cfg);

struct SearchFileSummary {
    std::size_t n;
    std::optional<std::size_t> max_rt;
    std::size_t records;
    bool complete;
    std::optional<SearchRecord> best;

    nlohmann::json to_json() const;
};

/// Reads an exhaustive search file, re-verifying every record. Throws
/// std::runtime_error on a record whose witness does not check out.
SearchFileSummary summarize_search_file(const std::string& path);

/// Uniform integer in [0, bound) by rejection; the engine must return full
/// 64-bit words (std::mt19937_64). Same values on every platform.
template <class Engine>
std::uint64_t uniform_below(std::uint64_t bound, Engine& rng) {
    const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

/// Uniform random permutation of {0..n-1} (Fisher-Yates).
template <class Engine>
Transformation random_permutation(std::size_t n, Engine& rng) {
    std::vector<State> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<State>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[uniform_below(i, rng)]);
    return Transformation(std::move(p));
}

}  // namespace synchrokit

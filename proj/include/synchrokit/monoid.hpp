#pragma once

// Structural predicates on the transition monoid: does it contain S_n, is it
// all of T_n, and is the permutation part 2-transitive.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "synchrokit/core.hpp"

namespace synchrokit {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation group given by generators, with a stabilizer chain built by
/// deterministic Schreier-Sims. Read-only after construction.
class PermutationGroup {
public:
    PermutationGroup(std::size_t n, std::span<const Transformation> generators);

    std::size_t degree() const noexcept { return n_; }
    const std::vector<Transformation>& generators() const noexcept { return generators_; }

    BigInt order() const;
    /// Decimal rendering of order(); handy where 64 bits overflow.
    std::string order_string() const;
    bool contains(const Transformation& g) const;
    bool is_symmetric() const;

    std::vector<State> base() const;
    std::vector<std::size_t> basic_orbit_lengths() const;
    std::size_t strong_generator_count() const noexcept { return strong_.size(); }

private:
    using Perm = std::vector<State>;

    struct Level {
        State base = 0;
        std::vector<std::size_t> gens;  // indices into strong_
        std::vector<int> orbit_pos;     // -1 when outside the orbit
        std::vector<State> orbit;
        std::vector<Perm> transversal;  // transversal[t] maps base to orbit[t]
        std::vector<Perm> inverse;
        std::vector<std::size_t> done;  // generators already paired with orbit[t]
    };

    std::pair<Perm, std::size_t> sift(Perm h, std::size_t from) const;
    void add_generator(Perm h, std::size_t from, std::size_t to);
    void extend_orbit(std::size_t level, std::size_t first_new_gen);
    void process(std::size_t level);
    bool is_identity(const Perm& p) const;

    std::size_t n_;
    std::vector<Transformation> generators_;
    std::vector<Perm> strong_;
    std::vector<Level> levels_;
};

/// True iff the permutations generate the full symmetric group on n points.
bool generates_symmetric_group(std::span<const Transformation> perms, std::size_t n);

/// Permutation letters generate S_n and some letter has rank n-1; this is
/// exactly the condition for the transition monoid to be T_n.
bool has_full_transition_monoid(const Dfa& d);

/// The group acts transitively on ordered pairs of distinct points.
bool is_two_transitive(std::span<const Transformation> perms, std::size_t n);

std::vector<Transformation> permutation_maps(const Dfa& d);

struct MonoidReport {
    bool full_transition_monoid;
    BigInt permutation_group_order;
    std::optional<bool> two_transitive;  // undefined below two states
};

MonoidReport monoid_report(const Dfa& d);

}  // namespace synchrokit

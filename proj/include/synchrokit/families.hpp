#pragma once

// Generators for the automata families studied here. Every generator returns
// 0-based transition tables and sets display labels with the customary state
// names (q_0..q_{n-1} for V_n and R_n, q_1..q_n for the rest).

#include <optional>
#include <string>

#include "synchrokit/core.hpp"

namespace synchrokit {

enum class Family { Cerny, CB, V, Rystsov, F };

struct FamilySpec {
    Family family;
    std::size_t n;
    std::optional<std::size_t> k;  // CB only
};

Family parse_family(const std::string& name);
std::string family_name(Family f);

/// Černý automaton C_n: a is the cycle q_i -> q_{i+1}, b sends q_1 to q_2.
Dfa cerny(std::size_t n);

/// C_n plus a letter c swapping q_k and q_{k+1}.
Dfa cb(std::size_t n, std::size_t k);

/// V_n: a_i (i < n) swaps q_{i-1} and q_i; a_n sends q_0 and q_1 to q_0.
Dfa v(std::size_t n);

/// V_n without a_1; q_0 is a sink.
Dfa rystsov(std::size_t n);

/// Two-permutation automaton F_n for odd n >= 7, built from F_7 by the
/// two-state extension step. See docs/f_family.md for the resolved tables.
Dfa f(std::size_t n);

Dfa make_family(const FamilySpec& spec);

}  // namespace synchrokit

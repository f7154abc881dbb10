#pragma once

// Transformations, automata, words and their action on states and state sets.
//
// States are 0-based everywhere in the library. Families that the literature
// names q_1..q_n carry display labels with the 1-based names; only labels and
// DOT output ever show them.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace synchrokit {

using State = std::uint32_t;
using LetterIndex = std::uint32_t;

/// A total map on {0, ..., n-1}; entry i is the image of state i.
class Transformation {
public:
    Transformation() = default;
    explicit Transformation(std::vector<State> images);
    Transformation(std::initializer_list<State> images)
        : Transformation(std::vector<State>(images)) {}

    static Transformation identity(std::size_t n);

    std::size_t degree() const noexcept { return images_.size(); }
    State operator[](State q) const { return images_[q]; }
    std::span<const State> images() const noexcept { return images_; }

    std::size_t rank() const;
    bool is_permutation() const { return rank() == degree(); }

    /// The unique state outside the image. Requires rank() == degree() - 1.
    State excluded_state() const;
    /// The unique image state with two preimages. Requires rank() == degree() - 1.
    State duplicate_state() const;

    /// Inverse of a permutation.
    Transformation inverse() const;

    friend bool operator==(const Transformation&, const Transformation&) = default;
    friend auto operator<=>(const Transformation&, const Transformation&) = default;

private:
    std::vector<State> images_;
};

/// t1 then t2: result[i] = t2[t1[i]].
Transformation compose(const Transformation& first, const Transformation& second);

struct Letter {
    std::string name;
    Transformation map;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A deterministic automaton without initial or final states.
class Dfa {
public:
    Dfa(std::size_t n, std::vector<Letter> letters);

    std::size_t size() const noexcept { return n_; }
    std::size_t letter_count() const noexcept { return letters_.size(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    const Letter& letter(LetterIndex a) const { return letters_.at(a); }
    std::optional<LetterIndex> find_letter(const std::string& name) const;

    /// Display name of a state; families set these, otherwise "q<i+1>".
    std::string state_label(State q) const;
    const std::vector<std::string>& state_labels() const noexcept { return labels_; }
    Dfa with_state_labels(std::vector<std::string> labels) const;

    /// Same automaton restricted to the given letters, in the given order.
    Dfa restricted(std::span<const LetterIndex> keep) const;
    Dfa without_letter(const std::string& name) const;

    std::vector<LetterIndex> permutation_letters() const;
    std::vector<LetterIndex> non_permutation_letters() const;

    /// Letterwise equality of names and maps; labels are ignored.
    friend bool operator==(const Dfa& lhs, const Dfa& rhs) {
        return lhs.n_ == rhs.n_ && lhs.letters_ == rhs.letters_;
    }

private:
    std::size_t n_;
    std::vector<Letter> letters_;
    std::vector<std::string> labels_;
};

/// A sequence of letter indices into some Dfa.
struct Word {
    std::vector<LetterIndex> letters;

    std::size_t length() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }

    Word& append(const Word& other);
    Word& push(LetterIndex a) { letters.push_back(a); return *this; }

    friend Word operator+(Word lhs, const Word& rhs) { return lhs.append(rhs); }
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Parses a word such as "b(cab)^5" or "a^3 b a" against letter names.
/// Letter names must be single characters for the compact syntax; otherwise
/// separate names with spaces.
Word parse_word(const Dfa& d, const std::string& text);
std::vector<std::string> word_names(const Dfa& d, const Word& w);
std::string word_string(const Dfa& d, const Word& w);
void check_word(const Dfa& d, const Word& w);

/// Subset of {0, ..., n-1} backed by a 64-bit mask (n <= 63).
class StateSet {
public:
    static constexpr std::size_t max_states = 63;

    explicit StateSet(std::size_t n, std::uint64_t mask = 0);
    StateSet(std::size_t n, std::initializer_list<State> members);

    static StateSet full(std::size_t n);
    static StateSet singleton(std::size_t n, State q);

    std::size_t universe() const noexcept { return n_; }
    std::uint64_t mask() const noexcept { return mask_; }
    std::size_t cardinality() const noexcept;
    bool contains(State q) const noexcept { return q < n_ && ((mask_ >> q) & 1U); }
    bool empty() const noexcept { return mask_ == 0; }
    std::vector<State> members() const;

    StateSet& insert(State q);

    friend bool operator==(const StateSet&, const StateSet&) = default;

private:
    std::size_t n_;
    std::uint64_t mask_;
};

StateSet apply_letter(const StateSet& s, const Transformation& t);
StateSet apply_word(const StateSet& s, const Dfa& d, const Word& w);

/// Image of all of Q under w, as a sorted list of states. Works for any n.
std::vector<State> image_of_all(const Dfa& d, const Word& w);
/// Image of an arbitrary state list under w (sorted, deduplicated).
std::vector<State> image_of(const Dfa& d, std::span<const State> states, const Word& w);

/// True when w maps Q to a single state.
bool is_reset_word(const Dfa& d, const Word& w);

/// Table-driven image of bit masks under one letter (n <= 63).
class MaskMapper {
public:
    explicit MaskMapper(const Transformation& t);
    std::uint64_t operator()(std::uint64_t mask) const noexcept {
        std::uint64_t out = 0;
        for (std::size_t chunk = 0; mask != 0; ++chunk, mask >>= 8) {
            out |= table_[chunk * 256 + (mask & 0xffU)];
        }
        return out;
    }

private:
    std::vector<std::uint64_t> table_;
};

}  // namespace synchrokit

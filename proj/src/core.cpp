#include "synchrokit/core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace synchrokit {

// ---------------------------------------------------------------- Transformation

Transformation::Transformation(std::vector<State> images) : images_(std::move(images)) {
    if (images_.empty()) {
        throw std::invalid_argument("transformation needs at least one state");
    }
    for (State q : images_) {
        if (q >= images_.size()) {
            throw std::invalid_argument("transformation image " + std::to_string(q) +
                                        " out of range for " + std::to_string(images_.size()) +
                                        " states");
        }
    }
}

Transformation Transformation::identity(std::size_t n) {
    std::vector<State> images(n);
    std::iota(images.begin(), images.end(), State{0});
    return Transformation(std::move(images));
}

std::size_t Transformation::rank() const {
    std::vector<bool> hit(degree(), false);
    std::size_t r = 0;
    for (State q : images_) {
        if (!hit[q]) {
            hit[q] = true;
            ++r;
        }
    }
    return r;
}

namespace {

std::vector<std::size_t> preimage_counts(std::span<const State> images) {
    std::vector<std::size_t> count(images.size(), 0);
    for (State q : images) ++count[q];
    return count;
}

void require_corank_one(const Transformation& t) {
    if (t.rank() + 1 != t.degree()) {
        throw std::invalid_argument("excluded/duplicate state requires rank n-1, got rank " +
                                    std::to_string(t.rank()) + " on " +
                                    std::to_string(t.degree()) + " states");
    }
}

}  // namespace

State Transformation::excluded_state() const {
    require_corank_one(*this);
    auto count = preimage_counts(images_);
    return static_cast<State>(std::find(count.begin(), count.end(), 0U) - count.begin());
}

State Transformation::duplicate_state() const {
    require_corank_one(*this);
    auto count = preimage_counts(images_);
    return static_cast<State>(std::find(count.begin(), count.end(), 2U) - count.begin());
}

Transformation Transformation::inverse() const {
    if (!is_permutation()) {
        throw std::invalid_argument("only permutations have inverses");
    }
    std::vector<State> inv(degree());
    for (State q = 0; q < degree(); ++q) inv[images_[q]] = q;
    return Transformation(std::move(inv));
}

Transformation compose(const Transformation& first, const Transformation& second) {
    if (first.degree() != second.degree()) {
        throw std::invalid_argument("compose: degree mismatch");
    }
    std::vector<State> images(first.degree());
    for (State q = 0; q < first.degree(); ++q) images[q] = second[first[q]];
    return Transformation(std::move(images));
}

// ---------------------------------------------------------------- Dfa

Dfa::Dfa(std::size_t n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
    if (n_ == 0) throw std::invalid_argument("automaton needs at least one state");
    if (letters_.empty()) throw std::invalid_argument("automaton needs at least one letter");
    std::set<std::string> seen;
    for (const auto& l : letters_) {
        if (l.map.degree() != n_) {
            throw std::invalid_argument("letter '" + l.name + "' acts on " +
                                        std::to_string(l.map.degree()) + " states, expected " +
                                        std::to_string(n_));
        }
        if (l.name.empty()) throw std::invalid_argument("letter names must be non-empty");
        if (!seen.insert(l.name).second) {
            throw std::invalid_argument("duplicate letter name '" + l.name + "'");
        }
    }
}

std::optional<LetterIndex> Dfa::find_letter(const std::string& name) const {
    for (LetterIndex a = 0; a < letters_.size(); ++a) {
        if (letters_[a].name == name) return a;
    }
    return std::nullopt;
}

std::string Dfa::state_label(State q) const {
    if (q < labels_.size()) return labels_[q];
    return "q" + std::to_string(q + 1);
}

Dfa Dfa::with_state_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != n_) {
        throw std::invalid_argument("label count does not match state count");
    }
    Dfa copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

Dfa Dfa::restricted(std::span<const LetterIndex> keep) const {
    std::vector<Letter> kept;
    kept.reserve(keep.size());
    for (LetterIndex a : keep) kept.push_back(letter(a));
    return Dfa(n_, std::move(kept)).with_state_labels(labels_);
}

Dfa Dfa::without_letter(const std::string& name) const {
    std::vector<LetterIndex> keep;
    for (LetterIndex a = 0; a < letters_.size(); ++a) {
        if (letters_[a].name != name) keep.push_back(a);
    }
    if (keep.size() == letters_.size()) {
        throw std::invalid_argument("no letter named '" + name + "'");
    }
    return restricted(keep);
}

std::vector<LetterIndex> Dfa::permutation_letters() const {
    std::vector<LetterIndex> out;
    for (LetterIndex a = 0; a < letters_.size(); ++a) {
        if (letters_[a].map.is_permutation()) out.push_back(a);
    }
    return out;
}

std::vector<LetterIndex> Dfa::non_permutation_letters() const {
    std::vector<LetterIndex> out;
    for (LetterIndex a = 0; a < letters_.size(); ++a) {
        if (!letters_[a].map.is_permutation()) out.push_back(a);
    }
    return out;
}

// ---------------------------------------------------------------- Word

Word& Word::append(const Word& other) {
    letters.insert(letters.end(), other.letters.begin(), other.letters.end());
    return *this;
}

void check_word(const Dfa& d, const Word& w) {
    for (LetterIndex a : w.letters) {
        if (a >= d.letter_count()) {
            throw std::invalid_argument("letter index " + std::to_string(a) + " out of range");
        }
    }
}

namespace {

class WordParser {
public:
    WordParser(const Dfa& d, const std::string& text) : d_(d), text_(text) {
        compact_ = std::all_of(d.letters().begin(), d.letters().end(),
                               [](const Letter& l) { return l.name.size() == 1; });
    }

    Word parse() {
        Word w = sequence();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    Word sequence() {
        Word w;
        for (;;) {
            skip_space();
            if (pos_ == text_.size() || text_[pos_] == ')') return w;
            w.append(item());
        }
    }

    Word item() {
        Word base;
        if (text_[pos_] == '(') {
            ++pos_;
            base = sequence();
            if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
            ++pos_;
        } else {
            base.push(letter());
        }
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) fail("expected exponent");
            auto times = std::stoul(text_.substr(start, pos_ - start));
            Word repeated;
            for (std::size_t i = 0; i < times; ++i) repeated.append(base);
            return repeated;
        }
        return base;
    }

    LetterIndex letter() {
        std::string name;
        if (compact_) {
            name = text_.substr(pos_, 1);
            ++pos_;
        } else {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name += text_[pos_++];
            }
            if (name.empty()) fail("expected letter name");
        }
        auto a = d_.find_letter(name);
        if (!a) fail("unknown letter '" + name + "'");
        return *a;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("word '" + text_ + "' at offset " + std::to_string(pos_) +
                                    ": " + what);
    }

    const Dfa& d_;
    const std::string& text_;
    std::size_t pos_ = 0;
    bool compact_ = false;
};

}  // namespace

Word parse_word(const Dfa& d, const std::string& text) { return WordParser(d, text).parse(); }

std::vector<std::string> word_names(const Dfa& d, const Word& w) {
    check_word(d, w);
    std::vector<std::string> names;
    names.reserve(w.length());
    for (LetterIndex a : w.letters) names.push_back(d.letter(a).name);
    return names;
}

std::string word_string(const Dfa& d, const Word& w) {
    std::string out;
    bool spaced = std::any_of(d.letters().begin(), d.letters().end(),
                              [](const Letter& l) { return l.name.size() != 1; });
    for (const auto& name : word_names(d, w)) {
        if (spaced && !out.empty()) out += ' ';
        out += name;
    }
    return out;
}

// ---------------------------------------------------------------- StateSet

StateSet::StateSet(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {
    if (n == 0 || n > max_states) {
        throw std::invalid_argument("state sets support 1.." + std::to_string(max_states) +
                                    " states, got " + std::to_string(n));
    }
    if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("state set mask out of range");
}

StateSet::StateSet(std::size_t n, std::initializer_list<State> members) : StateSet(n) {
    for (State q : members) insert(q);
}

StateSet StateSet::full(std::size_t n) {
    StateSet s(n);
    s.mask_ = (std::uint64_t{1} << n) - 1;
    return s;
}

StateSet StateSet::singleton(std::size_t n, State q) {
    StateSet s(n);
    return s.insert(q);
}

std::size_t StateSet::cardinality() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<State> StateSet::members() const {
    std::vector<State> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
        out.push_back(static_cast<State>(std::countr_zero(m)));
    }
    return out;
}

StateSet& StateSet::insert(State q) {
    if (q >= n_) throw std::invalid_argument("state " + std::to_string(q) + " out of range");
    mask_ |= std::uint64_t{1} << q;
    return *this;
}

StateSet apply_letter(const StateSet& s, const Transformation& t) {
    if (s.universe() != t.degree()) {
        throw std::invalid_argument("apply_letter: state set has " +
                                    std::to_string(s.universe()) + " states, letter has " +
                                    std::to_string(t.degree()));
    }
    StateSet out(s.universe());
    for (State q : s.members()) out.insert(t[q]);
    return out;
}

StateSet apply_word(const StateSet& s, const Dfa& d, const Word& w) {
    check_word(d, w);
    StateSet cur = s;
    for (LetterIndex a : w.letters) cur = apply_letter(cur, d.letter(a).map);
    return cur;
}

std::vector<State> image_of(const Dfa& d, std::span<const State> states, const Word& w) {
    check_word(d, w);
    std::vector<State> cur(states.begin(), states.end());
    std::vector<char> mark(d.size(), 0);
    std::vector<State> next;
    for (LetterIndex a : w.letters) {
        const auto& t = d.letter(a).map;
        next.clear();
        for (State q : cur) {
            State r = t[q];
            if (!mark[r]) {
                mark[r] = 1;
                next.push_back(r);
            }
        }
        for (State r : next) mark[r] = 0;
        cur.swap(next);
    }
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    return cur;
}

std::vector<State> image_of_all(const Dfa& d, const Word& w) {
    std::vector<State> all(d.size());
    std::iota(all.begin(), all.end(), State{0});
    return image_of(d, all, w);
}

bool is_reset_word(const Dfa& d, const Word& w) { return image_of_all(d, w).size() == 1; }

// ---------------------------------------------------------------- MaskMapper

MaskMapper::MaskMapper(const Transformation& t) {
    const std::size_t n = t.degree();
    if (n > StateSet::max_states) throw std::invalid_argument("MaskMapper: too many states");
    const std::size_t chunks = (n + 7) / 8;
    table_.assign(chunks * 256, 0);
    for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
        for (std::size_t byte = 0; byte < 256; ++byte) {
            std::uint64_t out = 0;
            for (std::size_t bit = 0; bit < 8; ++bit) {
                std::size_t q = chunk * 8 + bit;
                if (((byte >> bit) & 1U) && q < n) out |= std::uint64_t{1} << t[q];
            }
            table_[chunk * 256 + byte] = out;
        }
    }
}

}  // namespace synchrokit

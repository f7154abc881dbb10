#include <doctest.h>

#include "oracles.hpp"
#include "synchrokit/core.hpp"
#include "synchrokit/families.hpp"
#include "synchrokit/io.hpp"

using namespace synchrokit;

TEST_CASE("transformation validation and rank") {
    CHECK_THROWS_AS(Transformation({0, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Transformation(std::vector<State>{}), std::invalid_argument);
    Transformation t{0, 0, 2};
    CHECK(t.rank() == 2);
    CHECK_FALSE(t.is_permutation());
    CHECK(t.excluded_state() == 1);
    CHECK(t.duplicate_state() == 0);
    auto id = Transformation::identity(5);
    CHECK(id.rank() == 5);
    CHECK_THROWS_AS(id.excluded_state(), std::invalid_argument);
    CHECK_THROWS_AS(id.duplicate_state(), std::invalid_argument);
    CHECK_THROWS_AS(Transformation({0, 0, 0}).excluded_state(), std::invalid_argument);
}

TEST_CASE("merging letter of V_5") {
    Dfa d = v(5);
    const auto& a5 = d.letter(*d.find_letter("a5")).map;
    CHECK(a5.rank() == 4);
    CHECK(a5.excluded_state() == 1);
    CHECK(a5.duplicate_state() == 0);
    CHECK(apply_letter(StateSet::full(5), a5) == StateSet(5, {0, 2, 3, 4}));
}

TEST_CASE("compose runs the first map then the second") {
    Dfa d = v(5);
    auto a1 = d.letter(0).map;
    auto a2 = d.letter(1).map;
    CHECK(compose(a1, a2) == Transformation{2, 0, 1, 3, 4});
    CHECK(compose(a1, Transformation::identity(5)) == a1);
    CHECK(compose(a1, a1) == Transformation::identity(5));
    CHECK_THROWS_AS(compose(a1, Transformation::identity(4)), std::invalid_argument);
    Transformation p{1, 2, 0};
    CHECK(compose(p, p.inverse()) == Transformation::identity(3));
    CHECK_THROWS_AS(Transformation({0, 0, 1}).inverse(), std::invalid_argument);
}

TEST_CASE("state sets under letters and words") {
    CHECK(apply_letter(StateSet(5, {0, 1}), Transformation::identity(5)) == StateSet(5, {0, 1}));
    Dfa d = cb(7, 3);
    CHECK(apply_letter(StateSet(7, {1, 3}), d.letter(2).map) == StateSet(7, {1, 2}));
    CHECK_THROWS_AS(apply_letter(StateSet(4, {1}), Transformation::identity(5)), std::invalid_argument);
    CHECK(apply_word(StateSet(7, {2, 5}), d, Word{}) == StateSet(7, {2, 5}));
    Dfa one = cb(7, 1);
    Word w = parse_word(one, "b(cab)^5");
    CHECK(w.length() == 16);
    CHECK(apply_word(StateSet::full(7), one, w).cardinality() == 1);
    CHECK(is_reset_word(one, w));
    CHECK_THROWS_AS(StateSet(64), std::invalid_argument);
    CHECK_THROWS_AS(apply_word(StateSet::full(7), one, Word{{7}}), std::invalid_argument);
}

TEST_CASE("word parsing and printing") {
    Dfa d = cerny(4);
    CHECK(parse_word(d, "ab^2a").letters == std::vector<LetterIndex>{0, 1, 1, 0});
    CHECK(parse_word(d, "(ab)^2 b").letters == std::vector<LetterIndex>{0, 1, 0, 1, 1});
    CHECK(parse_word(d, "").empty());
    CHECK_THROWS_AS(parse_word(d, "ax"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(d, "(ab"), std::invalid_argument);
    CHECK(word_string(d, parse_word(d, "abba")) == "abba");
    Dfa vv = v(4);
    Word w = parse_word(vv, "a1 a4 (a2 a3)^2");
    CHECK(w.length() == 6);
    CHECK(word_string(vv, w) == "a1 a4 a2 a3 a2 a3");
}

TEST_CASE("dfa invariants") {
    CHECK_THROWS_AS(Dfa(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa(3, {{"a", Transformation::identity(3)}, {"a", Transformation::identity(3)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Dfa(3, {{"a", Transformation::identity(4)}}), std::invalid_argument);
    Dfa d = v(5);
    CHECK(d.state_label(0) == "q0");
    CHECK(cerny(3).state_label(0) == "q1");
    CHECK(d.permutation_letters().size() == 4);
    CHECK(d.non_permutation_letters() == std::vector<LetterIndex>{4});
}

TEST_CASE("image cardinality never grows and words split associatively") {
    oracle::Lcg rng{12345};
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t n = 2 + rng.below(10);
        std::size_t m = 1 + rng.below(3);
        std::vector<Letter> letters;
        for (std::size_t a = 0; a < m; ++a) letters.push_back({std::string(1, char('a' + a)), oracle::random_map(n, rng)});
        Dfa d(n, letters);
        Word u;
        Word w;
        for (std::size_t i = rng.below(8); i > 0; --i) u.push(static_cast<LetterIndex>(rng.below(m)));
        for (std::size_t i = rng.below(8); i > 0; --i) w.push(static_cast<LetterIndex>(rng.below(m)));
        StateSet s(n, rng.next() & ((std::uint64_t{1} << n) - 1));
        auto whole = apply_word(s, d, u + w);
        CHECK(whole == apply_word(apply_word(s, d, u), d, w));
        CHECK(whole.cardinality() <= s.cardinality());
    }
}

TEST_CASE("mask mapper agrees with member-wise images") {
    oracle::Lcg rng{7};
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.below(40);
        auto t = oracle::random_map(n, rng);
        MaskMapper map(t);
        std::uint64_t mask = rng.next() ^ (rng.next() << 31);
        if (n < 64) mask &= (std::uint64_t{1} << n) - 1;
        CHECK(map(mask) == apply_letter(StateSet(n, mask), t).mask());
    }
}

TEST_CASE("text and json formats round-trip") {
    for (const Dfa& d : {v(5), cb(6, 2), f(9), rystsov(4)}) {
        CHECK(parse_text(to_text(d)) == d);
        CHECK(from_json(to_json(d)) == d);
        CHECK(parse_dfa(to_json(d).dump()) == d);
    }
    CHECK(to_text(cerny(3)) == "3 2\na 1 2 0\nb 1 1 2\n");
    CHECK(parse_text("2 1\r\n\r\nx 1 0\r\n") == Dfa(2, {{"x", Transformation{1, 0}}}));
    CHECK_THROWS_AS(parse_text("2 1\nx 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_text("2 1\nx 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_text("2 1\nx 1 0\ny 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_text("2 2\nx 1 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dfa("{\"n\": 2}"), std::invalid_argument);
}

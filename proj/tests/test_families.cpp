#include <doctest.h>

#include "oracles.hpp"
#include "synchrokit/families.hpp"
#include "synchrokit/pairgraph.hpp"
#include "synchrokit/sync.hpp"

using namespace synchrokit;

TEST_CASE("cerny automata") {
    for (std::size_t n = 2; n <= 8; ++n) {
        CHECK(reset_threshold_exact(cerny(n))->reset_threshold == (n - 1) * (n - 1));
    }
    CHECK_THROWS_AS(cerny(1), std::invalid_argument);
}

TEST_CASE("cb automata") {
    Dfa d = cb(7, 4);
    const auto& c = d.letter(2).map;
    CHECK(c[3] == 4);
    CHECK(c[4] == 3);
    for (State q = 0; q < 7; ++q) {
        if (q != 3 && q != 4) CHECK(c[q] == q);
    }
    CHECK(d.without_letter("c") == cerny(7));
    // k = 2: b and c act on the adjacent positions q1, q2, q3.
    Dfa u = cb(6, 2);
    CHECK(u.letter(1).map == Transformation{1, 1, 2, 3, 4, 5});
    CHECK(u.letter(2).map == Transformation{0, 2, 1, 3, 4, 5});
    CHECK_THROWS_AS(cb(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(cb(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(cb(5, 5), std::invalid_argument);
}

TEST_CASE("V_5 transition table") {
    Dfa d = v(5);
    CHECK(d.letter_count() == 5);
    CHECK(d.letter(0) == Letter{"a1", Transformation{1, 0, 2, 3, 4}});
    CHECK(d.letter(1) == Letter{"a2", Transformation{0, 2, 1, 3, 4}});
    CHECK(d.letter(2) == Letter{"a3", Transformation{0, 1, 3, 2, 4}});
    CHECK(d.letter(3) == Letter{"a4", Transformation{0, 1, 2, 4, 3}});
    CHECK(d.letter(4) == Letter{"a5", Transformation{0, 0, 2, 3, 4}});
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(compose(d.letter(i).map, d.letter(i).map) == Transformation::identity(5));
    }
}

TEST_CASE("rystsov automata") {
    for (std::size_t n = 3; n <= 8; ++n) {
        Dfa d = rystsov(n);
        CHECK(d.letter_count() == n - 1);
        CHECK_FALSE(d.find_letter("a1"));
        for (const auto& l : d.letters()) CHECK(l.map[0] == 0);
    }
    CHECK(reset_threshold_exact(rystsov(5))->reset_threshold == 10);
    CHECK(reset_threshold_exact(rystsov(4))->reset_threshold == 6);
    CHECK(oracle::reset_threshold(rystsov(4)) == 6);
}

TEST_CASE("F_7 transition table") {
    Dfa d = f(7);
    const auto& a = d.letter(0).map;
    const auto& b = d.letter(1).map;
    CHECK(a == Transformation{1, 2, 3, 0, 6, 5, 4});
    CHECK(b == Transformation{5, 1, 4, 3, 2, 0, 6});
    CHECK(a[4] == 6);  // q5.a = q7
    CHECK(b[4] == 2);  // q5.b = q3
    CHECK(d.state_label(0) == "q1");
}

TEST_CASE("F_9 and F_11 resolved tables") {
    // a = (q1 q2 q3 q4)(q5 q7)(q6 q8)..., b = (q1 q6)(q3 q5)(q7 q9)...
    CHECK(f(9).letter(0).map == Transformation{1, 2, 3, 0, 6, 7, 4, 5, 8});
    CHECK(f(9).letter(1).map == Transformation{5, 1, 4, 3, 2, 0, 8, 7, 6});
    CHECK(f(11).letter(0).map == Transformation{1, 2, 3, 0, 6, 7, 4, 5, 10, 9, 8});
    CHECK(f(11).letter(1).map == Transformation{5, 1, 4, 3, 2, 0, 8, 9, 6, 7, 10});
}

TEST_CASE("F_n matches the unrolled cycle form") {
    for (std::size_t n = 7; n <= 41; n += 2) {
        // 1-based: a = (1 2 3 4)(5 7)(6 8)(9 11)(10 12)..., b = (1 6)(3 5)(7 9)(8 10)(11 13)...
        std::vector<State> a(n);
        std::vector<State> b(n);
        for (std::size_t q = 0; q < n; ++q) a[q] = b[q] = static_cast<State>(q);
        auto swap_in = [n](std::vector<State>& t, std::size_t x, std::size_t y) {
            if (y <= n) std::swap(t[x - 1], t[y - 1]);
        };
        a[0] = 1, a[1] = 2, a[2] = 3, a[3] = 0;
        swap_in(b, 1, 6);
        swap_in(b, 3, 5);
        for (std::size_t j = 1; 4 * j + 1 <= n; ++j) {
            swap_in(a, 4 * j + 1, 4 * j + 3);
            swap_in(a, 4 * j + 2, 4 * j + 4);
            swap_in(b, 4 * j + 3, 4 * j + 5);
            swap_in(b, 4 * j + 4, 4 * j + 6);
        }
        CHECK(f(n).letter(0).map == Transformation(a));
        CHECK(f(n).letter(1).map == Transformation(b));
    }
}

TEST_CASE("F_n letters are permutations with strongly connected pair digraph") {
    for (std::size_t n = 7; n <= 41; n += 2) {
        Dfa d = f(n);
        CHECK(d.letter(0).map.is_permutation());
        CHECK(d.letter(1).map.is_permutation());
        CHECK(diameter(PairDigraph(d)).strongly_connected);
    }
}

TEST_CASE("F_n outer states follow the alternating pattern") {
    for (std::size_t n = 7; n <= 31; n += 2) {
        Dfa d = f(n);
        const std::size_t k = (n - 5) / 2;
        const auto& x = d.letter(k % 2 == 1 ? 0 : 1).map;
        const auto& y = d.letter(k % 2 == 1 ? 1 : 0).map;
        const auto last = static_cast<State>(n - 1);
        CHECK(y[last] == last);
        CHECK(x[last - 1] == last - 1);
        CHECK(x[last - 2] == last);
    }
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(f(8), std::invalid_argument);
    CHECK_THROWS_AS(f(5), std::invalid_argument);
    CHECK_THROWS_AS(v(1), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("zeta"), std::invalid_argument);
    CHECK(make_family({Family::CB, 5, 2}) == cb(5, 2));
    CHECK_THROWS_AS(make_family({Family::CB, 5, std::nullopt}), std::invalid_argument);
    CHECK(family_name(parse_family("rystsov")) == "rystsov");
}

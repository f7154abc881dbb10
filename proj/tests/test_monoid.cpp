#include <doctest.h>

#include "oracles.hpp"
#include "synchrokit/families.hpp"
#include "synchrokit/monoid.hpp"

using namespace synchrokit;

namespace {

Transformation cycle(std::size_t n) {
    std::vector<State> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<State>((i + 1) % n);
    return Transformation(p);
}

Transformation swap01(std::size_t n) {
    std::vector<State> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<State>(i);
    std::swap(p[0], p[1]);
    return Transformation(p);
}

}  // namespace

TEST_CASE("cycle and transposition generate S_n") {
    for (std::size_t n = 2; n <= 12; ++n) {
        std::vector<Transformation> gens{cycle(n), swap01(n)};
        CHECK(generates_symmetric_group(gens, n));
        PermutationGroup g(n, gens);
        CHECK(g.is_symmetric());
    }
    PermutationGroup s20(20, std::vector<Transformation>{cycle(20), swap01(20)});
    CHECK(s20.order_string() == "2432902008176640000");
    PermutationGroup s30(30, std::vector<Transformation>{cycle(30), swap01(30)});
    CHECK(s30.order_string() == "265252859812191058636308480000000");
}

TEST_CASE("small and degenerate groups") {
    std::vector<Transformation> id{Transformation::identity(4)};
    CHECK_FALSE(generates_symmetric_group(id, 4));
    CHECK(PermutationGroup(4, id).order() == 1);
    std::vector<Transformation> c{cycle(6)};
    CHECK(PermutationGroup(6, c).order() == 6);
    CHECK_FALSE(generates_symmetric_group(c, 6));
    std::vector<Transformation> bad{Transformation{0, 0, 1}};
    CHECK_THROWS_AS(generates_symmetric_group(bad, 3), std::invalid_argument);
    // Alternating group A_5 from (0 1 2) and (0 1 2 3 4).
    std::vector<Transformation> a5{Transformation{1, 2, 0, 3, 4}, cycle(5)};
    PermutationGroup g(5, a5);
    CHECK(g.order() == 60);
    CHECK(g.contains(Transformation{2, 0, 1, 3, 4}));
    CHECK_FALSE(g.contains(swap01(5)));
}

TEST_CASE("swap letters of V_n generate S_n") {
    for (std::size_t n = 3; n <= 10; ++n) {
        auto perms = permutation_maps(v(n));
        CHECK(perms.size() == n - 1);
        CHECK(generates_symmetric_group(perms, n));
    }
}

TEST_CASE("stabilizer chain order matches brute-force closure") {
    oracle::Lcg rng{99};
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng.below(7);
        std::size_t k = 1 + rng.below(3);
        std::vector<Transformation> gens;
        for (std::size_t i = 0; i < k; ++i) {
            auto p = oracle::random_perm(n, rng);
            // Bias toward small groups: sometimes square or cube a generator.
            if (rng.below(3) == 0) p = compose(p, p);
            gens.push_back(p);
        }
        PermutationGroup g(n, gens);
        CHECK(g.order() == oracle::closure_size(gens, n));
        CHECK(g.is_symmetric() == (oracle::closure_size(gens, n) == oracle::factorial(n)));
    }
}

TEST_CASE("membership agrees with closure") {
    std::vector<Transformation> gens{Transformation{1, 0, 2, 3, 4, 5}, Transformation{0, 1, 3, 4, 5, 2}};
    PermutationGroup g(6, gens);
    CHECK(g.order() == 8);
    CHECK(g.contains(Transformation{1, 0, 4, 5, 2, 3}));
    CHECK_FALSE(g.contains(Transformation{0, 2, 1, 3, 4, 5}));
}

TEST_CASE("full transition monoid criterion") {
    for (std::size_t n = 3; n <= 9; ++n) {
        CHECK(has_full_transition_monoid(v(n)));
        CHECK_FALSE(has_full_transition_monoid(cerny(n)));
        for (std::size_t k = 1; k < n; ++k) CHECK(has_full_transition_monoid(cb(n, k)));
    }
    CHECK(has_full_transition_monoid(Dfa(1, {{"a", Transformation{0}}})));
    CHECK_FALSE(has_full_transition_monoid(f(7)));
    CHECK_FALSE(has_full_transition_monoid(rystsov(5)));
}

TEST_CASE("full transition monoid criterion agrees with closure in T_n") {
    oracle::Lcg rng{2024};
    int full = 0;
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 2 + rng.below(4);
        std::size_t m = 2 + rng.below(2);
        std::vector<Letter> letters;
        std::vector<Transformation> maps;
        for (std::size_t a = 0; a < m; ++a) {
            auto t = rng.below(2) == 0 ? oracle::random_perm(n, rng) : oracle::random_map(n, rng);
            letters.push_back({std::string(1, char('a' + a)), t});
            maps.push_back(t);
        }
        Dfa d(n, letters);
        bool brute = oracle::closure_size(maps, n) == oracle::power(n, n);
        full += brute ? 1 : 0;
        CHECK(has_full_transition_monoid(d) == brute);
    }
    CHECK(full > 0);
    // T_6 has 46656 elements; one direct check at that size.
    Dfa d6 = v(6);
    CHECK(oracle::closure_size(permutation_maps(d6), 6) == 720);
    std::vector<Transformation> all;
    for (const auto& l : d6.letters()) all.push_back(l.map);
    CHECK(oracle::closure_size(all, 6) == 46656);
}

TEST_CASE("two-transitivity") {
    for (std::size_t n = 2; n <= 8; ++n) {
        std::vector<Transformation> gens{cycle(n), swap01(n)};
        CHECK(is_two_transitive(gens, n));
    }
    for (std::size_t n = 4; n <= 8; ++n) {
        std::vector<Transformation> c{cycle(n)};
        CHECK_FALSE(is_two_transitive(c, n));
    }
    // AGL(1,5) = <x+1, 2x> is sharply 2-transitive but not S_5.
    std::vector<Transformation> agl{cycle(5), Transformation{0, 2, 4, 1, 3}};
    CHECK(is_two_transitive(agl, 5));
    CHECK(PermutationGroup(5, agl).order() == 20);
    std::vector<Transformation> one{Transformation{0}};
    CHECK_THROWS_AS(is_two_transitive(one, 1), std::invalid_argument);
    CHECK(is_two_transitive(permutation_maps(f(7)), 7));
    CHECK(PermutationGroup(7, permutation_maps(f(7))).order() == 2520);
}

TEST_CASE("monoid report") {
    auto r = monoid_report(v(5));
    CHECK(r.full_transition_monoid);
    CHECK(r.permutation_group_order == 120);
    CHECK(r.two_transitive == true);
    auto c = monoid_report(cerny(5));
    CHECK_FALSE(c.full_transition_monoid);
    CHECK(c.permutation_group_order == 5);
    CHECK(c.two_transitive == false);
}

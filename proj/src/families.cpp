#include "synchrokit/families.hpp"

#include <array>
#include <numeric>

namespace synchrokit {

namespace {

std::vector<std::string> labels(std::size_t n, std::size_t first) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back("q" + std::to_string(i + first));
    return out;
}

std::vector<State> identity_images(std::size_t n) {
    std::vector<State> images(n);
    std::iota(images.begin(), images.end(), State{0});
    return images;
}

std::vector<State> cycle_images(std::size_t n) {
    std::vector<State> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<State>((i + 1) % n);
    return images;
}

// F_n letters as 0-based image tables; index i holds q_{i+1}.
struct FTables {
    std::vector<State> a;
    std::vector<State> b;
};

FTables f7() {
    // a = (q1 q2 q3 q4)(q5 q7), fixes q6;  b = (q1 q6)(q3 q5), fixes q2, q4, q7.
    return {{1, 2, 3, 0, 6, 5, 4}, {5, 1, 4, 3, 2, 0, 6}};
}

// F_n -> F_{n+2}. The letter fixing q_{n-1} now swaps q_{n-1} and q_{n+1};
// the letter fixing q_n swaps q_n and q_{n+2}. The remaining letter keeps its
// old images on q_{n-1} and q_n and fixes the new state next to them.
FTables f_step(const FTables& t) {
    const std::size_t n = t.a.size();
    const State last = static_cast<State>(n - 1);     // q_n
    const State second = static_cast<State>(n - 2);   // q_{n-1}
    std::array<const std::vector<State>*, 2> old{&t.a, &t.b};

    auto fixer = [&](State q) {
        int found = -1;
        for (int i = 0; i < 2; ++i) {
            if ((*old[i])[q] == q) {
                if (found >= 0) throw std::logic_error("F step: both letters fix a boundary state");
                found = i;
            }
        }
        if (found < 0) throw std::logic_error("F step: no letter fixes a boundary state");
        return found;
    };
    const int fix_second = fixer(second);
    const int fix_last = fixer(last);

    FTables next{t.a, t.b};
    next.a.resize(n + 2);
    next.b.resize(n + 2);
    std::array<std::vector<State>*, 2> out{&next.a, &next.b};
    const State q_n1 = static_cast<State>(n);       // q_{n+1}
    const State q_n2 = static_cast<State>(n + 1);   // q_{n+2}

    (*out[fix_second])[second] = q_n1;
    (*out[fix_second])[q_n1] = second;
    (*out[1 - fix_second])[q_n1] = q_n1;

    (*out[fix_last])[last] = q_n2;
    (*out[fix_last])[q_n2] = last;
    (*out[1 - fix_last])[q_n2] = q_n2;
    return next;
}

void validate_f(const FTables& t) {
    const std::size_t n = t.a.size();
    Transformation a(t.a);
    Transformation b(t.b);
    if (!a.is_permutation() || !b.is_permutation()) {
        throw std::logic_error("F_" + std::to_string(n) + ": letters are not permutations");
    }
    // Outer states q_{2k+3}, q_{2k+4}, q_{2k+5} with k = (n-5)/2. For k odd the
    // chain ends a-b-(b loop) on the right and (a loop) on the left; for k even
    // the letters trade places.
    const std::size_t k = (n - 5) / 2;
    const Transformation& x = (k % 2 == 1) ? a : b;  // plays 'a' of the k-odd picture
    const Transformation& y = (k % 2 == 1) ? b : a;
    const State q2k3 = static_cast<State>(2 * k + 2);
    const State q2k4 = static_cast<State>(2 * k + 3);
    const State q2k5 = static_cast<State>(2 * k + 4);
    bool ok = y[q2k5] == q2k5 && x[q2k4] == q2k4 && x[q2k3] == q2k5 && x[q2k5] == q2k3;
    if (n > 7) ok = ok && y[q2k4] == q2k4 - 2 && y[q2k3] == q2k3 - 2;
    if (!ok) throw std::logic_error("F_" + std::to_string(n) + ": outer states do not match");
}

}  // namespace

Family parse_family(const std::string& name) {
    if (name == "cerny") return Family::Cerny;
    if (name == "cb") return Family::CB;
    if (name == "v") return Family::V;
    if (name == "rystsov") return Family::Rystsov;
    if (name == "f") return Family::F;
    throw std::invalid_argument("unknown family '" + name + "' (cerny|cb|v|rystsov|f)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Cerny: return "cerny";
        case Family::CB: return "cb";
        case Family::V: return "v";
        case Family::Rystsov: return "rystsov";
        case Family::F: return "f";
    }
    return "?";
}

Dfa cerny(std::size_t n) {
    if (n < 2) throw std::invalid_argument("cerny: n must be at least 2");
    auto b = identity_images(n);
    b[0] = 1;
    return Dfa(n, {{"a", Transformation(cycle_images(n))}, {"b", Transformation(b)}})
        .with_state_labels(labels(n, 1));
}

Dfa cb(std::size_t n, std::size_t k) {
    if (n < 3) throw std::invalid_argument("cb: n must be at least 3");
    if (k < 1 || k > n - 1) throw std::invalid_argument("cb: k must lie in [1, n-1]");
    auto b = identity_images(n);
    b[0] = 1;
    auto c = identity_images(n);
    std::swap(c[k - 1], c[k]);
    return Dfa(n, {{"a", Transformation(cycle_images(n))},
                   {"b", Transformation(b)},
                   {"c", Transformation(c)}})
        .with_state_labels(labels(n, 1));
}

Dfa v(std::size_t n) {
    if (n < 2) throw std::invalid_argument("v: n must be at least 2");
    std::vector<Letter> letters;
    for (std::size_t i = 1; i < n; ++i) {
        auto t = identity_images(n);
        std::swap(t[i - 1], t[i]);
        letters.push_back({"a" + std::to_string(i), Transformation(t)});
    }
    auto merge = identity_images(n);
    merge[1] = 0;
    letters.push_back({"a" + std::to_string(n), Transformation(merge)});
    return Dfa(n, std::move(letters)).with_state_labels(labels(n, 0));
}

Dfa rystsov(std::size_t n) {
    if (n < 2) throw std::invalid_argument("rystsov: n must be at least 2");
    return v(n).without_letter("a1");
}

Dfa f(std::size_t n) {
    if (n < 7 || n % 2 == 0) throw std::invalid_argument("f: n must be odd and at least 7");
    FTables t = f7();
    validate_f(t);
    while (t.a.size() < n) {
        t = f_step(t);
        validate_f(t);
    }
    return Dfa(n, {{"a", Transformation(t.a)}, {"b", Transformation(t.b)}})
        .with_state_labels(labels(n, 1));
}

Dfa make_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Cerny: return cerny(spec.n);
        case Family::CB:
            if (!spec.k) throw std::invalid_argument("cb needs k");
            return cb(spec.n, *spec.k);
        case Family::V: return v(spec.n);
        case Family::Rystsov: return rystsov(spec.n);
        case Family::F: return f(spec.n);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace synchrokit

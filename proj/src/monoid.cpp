#include "synchrokit/monoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace synchrokit {

namespace {

void require_permutations(std::span<const Transformation> perms, std::size_t n) {
    for (const auto& p : perms) {
        if (p.degree() != n) throw std::invalid_argument("permutation degree mismatch");
        if (!p.is_permutation()) throw std::invalid_argument("generator is not a permutation");
    }
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t n, std::span<const Transformation> generators)
    : n_(n), generators_(generators.begin(), generators.end()) {
    if (n == 0) throw std::invalid_argument("permutation group needs at least one point");
    require_permutations(generators, n);
    for (const auto& g : generators_) {
        Perm p(g.images().begin(), g.images().end());
        auto [residue, level] = sift(std::move(p), 0);
        if (is_identity(residue)) continue;
        add_generator(std::move(residue), 0, level);
        for (std::size_t l = level + 1; l-- > 0;) process(l);
    }
}

bool PermutationGroup::is_identity(const Perm& p) const {
    for (State q = 0; q < p.size(); ++q) {
        if (p[q] != q) return false;
    }
    return true;
}

// Products act on the right: (g * h)[x] = h[g[x]].
std::pair<PermutationGroup::Perm, std::size_t> PermutationGroup::sift(Perm h,
                                                                      std::size_t from) const {
    Perm tmp(n_);
    for (std::size_t l = from; l < levels_.size(); ++l) {
        const Level& L = levels_[l];
        int pos = L.orbit_pos[h[L.base]];
        if (pos < 0) return {std::move(h), l};
        const Perm& inv = L.inverse[static_cast<std::size_t>(pos)];
        for (State q = 0; q < n_; ++q) tmp[q] = inv[h[q]];
        h.swap(tmp);
    }
    return {std::move(h), levels_.size()};
}

void PermutationGroup::add_generator(Perm h, std::size_t from, std::size_t to) {
    strong_.push_back(std::move(h));
    const std::size_t index = strong_.size() - 1;
    for (std::size_t l = from; l <= to; ++l) {
        if (l == levels_.size()) {
            const Perm& g = strong_[index];
            State moved = 0;
            while (g[moved] == moved) ++moved;
            Level L;
            L.base = moved;
            L.orbit_pos.assign(n_, -1);
            L.orbit_pos[moved] = 0;
            L.orbit.push_back(moved);
            Perm id(n_);
            std::iota(id.begin(), id.end(), State{0});
            L.transversal.push_back(id);
            L.inverse.push_back(id);
            L.done.push_back(0);
            levels_.push_back(std::move(L));
        }
        levels_[l].gens.push_back(index);
        extend_orbit(l, levels_[l].gens.size() - 1);
    }
}

// Extends the orbit of level l: existing points get the generators from
// first_new_gen on, new points get all generators. Existing transversal
// entries never change, so Schreier generators already checked stay valid.
void PermutationGroup::extend_orbit(std::size_t l, std::size_t first_new_gen) {
    Level& L = levels_[l];
    std::size_t old_size = L.orbit.size();
    for (std::size_t t = 0; t < L.orbit.size(); ++t) {
        std::size_t g0 = t < old_size ? first_new_gen : 0;
        for (std::size_t gi = g0; gi < L.gens.size(); ++gi) {
            const Perm& s = strong_[L.gens[gi]];
            State y = s[L.orbit[t]];
            if (L.orbit_pos[y] >= 0) continue;
            Perm u(n_);
            const Perm& ux = L.transversal[t];
            for (State q = 0; q < n_; ++q) u[q] = s[ux[q]];
            Perm inv(n_);
            for (State q = 0; q < n_; ++q) inv[u[q]] = q;
            L.orbit_pos[y] = static_cast<int>(L.orbit.size());
            L.orbit.push_back(y);
            L.transversal.push_back(std::move(u));
            L.inverse.push_back(std::move(inv));
            L.done.push_back(0);
        }
    }
}

void PermutationGroup::process(std::size_t l) {
    Perm h(n_);
    for (std::size_t t = 0; t < levels_[l].orbit.size(); ++t) {
        while (levels_[l].done[t] < levels_[l].gens.size()) {
            const Level& L = levels_[l];
            const Perm& s = strong_[L.gens[L.done[t]]];
            levels_[l].done[t]++;
            // Schreier generator u_x * s * u_{x^s}^{-1}
            State y = s[L.orbit[t]];
            const Perm& ux = L.transversal[t];
            const Perm& uy_inv = L.inverse[static_cast<std::size_t>(L.orbit_pos[y])];
            for (State q = 0; q < n_; ++q) h[q] = uy_inv[s[ux[q]]];
            if (is_identity(h)) continue;
            auto [residue, j] = sift(h, l + 1);
            if (is_identity(residue)) continue;
            add_generator(std::move(residue), l + 1, j);
            for (std::size_t k = j; k > l; --k) process(k);
        }
    }
}

BigInt PermutationGroup::order() const {
    BigInt result = 1;
    for (const auto& L : levels_) result *= L.orbit.size();
    return result;
}

std::string PermutationGroup::order_string() const { return order().str(); }

bool PermutationGroup::contains(const Transformation& g) const {
    if (g.degree() != n_ || !g.is_permutation()) return false;
    auto [residue, level] = sift(Perm(g.images().begin(), g.images().end()), 0);
    return is_identity(residue);
}

bool PermutationGroup::is_symmetric() const {
    BigInt factorial = 1;
    for (std::size_t i = 2; i <= n_; ++i) factorial *= i;
    return order() == factorial;
}

std::vector<State> PermutationGroup::base() const {
    std::vector<State> out;
    for (const auto& L : levels_) out.push_back(L.base);
    return out;
}

std::vector<std::size_t> PermutationGroup::basic_orbit_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& L : levels_) out.push_back(L.orbit.size());
    return out;
}

bool generates_symmetric_group(std::span<const Transformation> perms, std::size_t n) {
    require_permutations(perms, n);
    if (n <= 1) return true;
    // S_n is transitive; reject cheaply before building the chain.
    std::vector<char> seen(n, 0);
    std::vector<State> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (const auto& p : perms) {
            if (!seen[p[q]]) {
                seen[p[q]] = 1;
                ++reached;
                stack.push_back(p[q]);
            }
        }
    }
    if (reached != n) return false;
    return PermutationGroup(n, perms).is_symmetric();
}

std::vector<Transformation> permutation_maps(const Dfa& d) {
    std::vector<Transformation> out;
    for (LetterIndex a : d.permutation_letters()) out.push_back(d.letter(a).map);
    return out;
}

bool has_full_transition_monoid(const Dfa& d) {
    const std::size_t n = d.size();
    if (n == 1) return true;
    bool corank_one = std::any_of(d.letters().begin(), d.letters().end(),
                                  [n](const Letter& l) { return l.map.rank() + 1 == n; });
    return corank_one && generates_symmetric_group(permutation_maps(d), n);
}

bool is_two_transitive(std::span<const Transformation> perms, std::size_t n) {
    if (n < 2) throw std::invalid_argument("2-transitivity needs at least two points");
    require_permutations(perms, n);
    std::vector<char> seen(n * n, 0);
    std::deque<std::pair<State, State>> queue{{0, 1}};
    seen[1] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        for (const auto& p : perms) {
            std::size_t key = p[u] * n + p[v];
            if (!seen[key]) {
                seen[key] = 1;
                ++reached;
                queue.emplace_back(p[u], p[v]);
            }
        }
    }
    return reached == n * (n - 1);
}

MonoidReport monoid_report(const Dfa& d) {
    auto perms = permutation_maps(d);
    MonoidReport r{has_full_transition_monoid(d), PermutationGroup(d.size(), perms).order(),
                   std::nullopt};
    if (d.size() >= 2) r.two_transitive = is_two_transitive(perms, d.size());
    return r;
}

}  // namespace synchrokit

// Independent cross-check for psi_pushforward: forgets the extra marked
// points one at a time using only the one-point comparison rules
//
//   ψ_j = π*ψ_j + D_j,   ψ_•·D_j = 0,   D_i·D_j = 0 (i ≠ j),
//   D_j² = −π*ψ_j·D_j,   κ_a = π*κ_a + ψ_•^a (a ≥ 1),
//   π_*(D_j) = 1,   π_*(π*X) = 0,   π_*(π*X·ψ_•^b) = X·κ_{b−1} (b ≥ 1),
//
// where • is the point being forgotten and κ_0 on the target is the number
// 2g−2+(marking count there).  This never touches the string/dilation
// reduction or the cycle-sum formula, so agreement with psi_pushforward is
// a genuine two-route check.  Used by tests and the verify suites only;
// no production computation calls it.
#pragma once

#include "kappa/kappa_polynomial.hpp"
#include "kappa/partition.hpp"
#include "kappa/rational.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kappa {

inline KappaPoly oracle_pushforward(const std::vector<int>& e, const Rational& zeta) {
    if (e.empty()) throw std::invalid_argument("oracle_pushforward: empty exponent vector");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("oracle_pushforward: negative exponent");
    const int ell = static_cast<int>(e.size());
    const int total = std::accumulate(e.begin(), e.end(), 0);
    if (ell > 3 || total > 8)
        throw std::invalid_argument("oracle_pushforward: outside the desk-scale bounds");

    // A state is Σ coeff·(ψ exponents at the surviving extra points)·κ_K.
    using Key = std::pair<std::vector<int>, Partition>;
    std::map<Key, Rational> state;
    state[{e, Partition{}}] = Rational(1);

    for (int remaining = ell - 1; remaining >= 0; --remaining) {
        // Forget the last surviving extra point; on the target there are
        // `remaining` extra points left, so κ_0 there is ζ + remaining.
        const Rational kappa0 = zeta + Rational(remaining);
        std::map<Key, Rational> next;
        auto add = [&](const std::vector<int>& v, const Partition& k, const Rational& c) {
            Rational& slot = next[{v, k}];
            slot += c;
            if (slot.is_zero()) next.erase({v, k});
        };

        for (const auto& [key, coeff] : state) {
            const std::vector<int>& v = key.first;
            const Partition& kap = key.second;
            const int b0 = v.back();
            std::vector<int> rest(v.begin(), v.end() - 1);

            // Convert a sub-multiset T of the κ indices to ψ_• powers via
            // κ_a = π*κ_a + ψ_•^a, then push forward.
            auto groups = kap.multiplicities();
            std::vector<int> take(groups.size(), 0);
            std::vector<int> kept;
            std::function<void(size_t, int, Rational)> pick = [&](size_t gi, int tsum,
                                                                  Rational ways) {
                if (gi == groups.size()) {
                    const int B = b0 + tsum;
                    kept.clear();
                    for (size_t g = 0; g < groups.size(); ++g)
                        for (int c = 0; c < groups[g].second - take[g]; ++c)
                            kept.push_back(groups[g].first);
                    if (B >= 1) {
                        Rational c2 = coeff * ways;
                        std::vector<int> parts = kept;
                        if (B == 1)
                            c2 *= kappa0;  // κ_0 on the target is a number
                        else
                            parts.push_back(B - 1);
                        add(rest, Partition(parts), c2);
                    } else {
                        // B = 0 (so T was empty): only the diagonal terms
                        // survive; D_i lowers ψ_i by one and pushes to 1.
                        for (size_t i = 0; i < rest.size(); ++i) {
                            if (rest[i] < 1) continue;
                            std::vector<int> v2 = rest;
                            --v2[i];
                            add(v2, kap, coeff * ways);
                        }
                    }
                    return;
                }
                auto [value, mult] = groups[gi];
                for (int t = 0; t <= mult; ++t) {
                    take[gi] = t;
                    pick(gi + 1, tsum + t * value, ways * Rational(binomial(mult, t)));
                }
                take[gi] = 0;
            };
            pick(0, 0, Rational(1));
        }
        state = std::move(next);
    }

    KappaPoly out(total - ell, zeta);
    for (const auto& [key, coeff] : state) out.add_term(key.second, coeff);
    return out;
}

}  // namespace kappa

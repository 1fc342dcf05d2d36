// Push-forwards of ψ monomials at the ℓ extra markings along the map that
// forgets them, written in κ classes with κ_0 evaluated at ζ = 2g−2+n.
//
// Three layers:
//   faber_pushforward : ε_*(ψ^{1+a_1}···ψ^{1+a_ℓ}) = Σ_{σ∈S_ℓ} κ_{σ(a)},
//     one κ index per cycle of σ (the cycle's a-sum); a zero cycle sum is a
//     κ_0 and contributes the factor ζ.  Computed by a set-partition
//     recursion on the block containing the first entry ((c−1)! cyclic
//     orders per c-element block), not by enumerating S_ℓ.
//   psi_pushforward   : arbitrary exponents; the string equation removes
//     ψ^0 factors (leftmost zero first — the choice is immaterial and
//     certified by a permutation-invariance test), then Faber applies.
//   bracket_class     : ⟨p⟩ = Σ over exponent tuples e with Σe = ℓ+d of
//     (∏ p_i^{e_i})·ε_*(ψ^e), the degree-d truncation of
//     ε_*[∏ 1/(1−p_iψ)].
//
// All three memoize on the exponent multiset; results are order-insensitive.
#pragma once

#include "kappa/kappa_polynomial.hpp"
#include "kappa/matrix.hpp"
#include "kappa/partition.hpp"
#include "kappa/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace kappa {

class PushforwardCalculator {
public:
    explicit PushforwardCalculator(Rational zeta) : zeta_(std::move(zeta)) {}

    const Rational& zeta() const { return zeta_; }

    // a_i ≥ 0; result is homogeneous of degree Σa_i.
    KappaPoly faber(std::vector<int> a) {
        for (int x : a)
            if (x < 0) throw std::invalid_argument("faber_pushforward: negative entry");
        std::sort(a.begin(), a.end(), std::greater<int>());
        return faber_sorted(a);
    }

    // e_i ≥ 0; result is homogeneous of degree Σe_i − ℓ.
    KappaPoly psi(std::vector<int> e) {
        if (e.empty()) throw std::invalid_argument("psi_pushforward: empty exponent vector");
        for (int x : e)
            if (x < 0) throw std::invalid_argument("psi_pushforward: negative exponent");
        std::sort(e.begin(), e.end(), std::greater<int>());
        return psi_sorted(e);
    }

    // ⟨p⟩ for a nonempty partition p; degree d = Σp_i.
    KappaPoly bracket(const Partition& p) {
        if (p.empty()) throw std::invalid_argument("bracket_class: empty partition");
        const int ell = p.length();
        const int d = p.d();
        const int total = ell + d;
        KappaPoly result(d, zeta_);

        // Group equal parts: an exponent tuple is determined by the multiset
        // assigned to each group, weighted by the number of orderings within
        // the group and by v^(sum of that group's exponents).
        auto groups = p.multiplicities();
        std::vector<int> exps;  // concatenated exponent multisets
        assign_group(groups, 0, total, Rational(1), exps, result);
        return result;
    }

private:
    // --- Faber recursion ----------------------------------------------------

    KappaPoly faber_sorted(const std::vector<int>& a) {
        auto hit = faber_memo_.find(a);
        if (hit != faber_memo_.end()) return hit->second;

        KappaPoly result(std::accumulate(a.begin(), a.end(), 0), zeta_);
        if (a.empty()) {
            result.add_term(Partition{}, Rational(1));
        } else {
            // Choose the block (cycle support) containing a[0]: a sub-multiset
            // S of the remaining entries, |S|! cyclic orders, combined with
            // every completion of the rest.
            std::vector<int> rest(a.begin() + 1, a.end());
            auto rest_groups = multiset_groups(rest);
            std::vector<int> chosen;
            choose_block(rest_groups, 0, a[0], Rational(1), chosen, rest, result);
        }
        faber_memo_.emplace(a, result);
        return result;
    }

    static std::vector<std::pair<int, int>> multiset_groups(const std::vector<int>& sorted) {
        std::vector<std::pair<int, int>> g;
        for (int v : sorted) {
            if (!g.empty() && g.back().first == v)
                ++g.back().second;
            else
                g.emplace_back(v, 1);
        }
        return g;
    }

    void choose_block(const std::vector<std::pair<int, int>>& rest_groups, size_t gi, int first,
                      Rational ways, std::vector<int>& chosen, const std::vector<int>& rest,
                      KappaPoly& result) {
        if (gi == rest_groups.size()) {
            // Block = {first} ∪ chosen; (|chosen|)! cyclic orders.
            int block_sum = first;
            for (int v : chosen) block_sum += v;
            std::vector<int> remaining;
            remaining.reserve(rest.size() - chosen.size());
            size_t ci = 0;
            for (int v : rest) {
                if (ci < chosen.size() && chosen[ci] == v)
                    ++ci;  // chosen is drawn in rest's sorted order
                else
                    remaining.push_back(v);
            }
            KappaPoly sub = faber_sorted(remaining);
            Rational w = ways * Rational(factorial(static_cast<long long>(chosen.size())));
            if (block_sum == 0) {
                w *= zeta_;
                for (const auto& [q, c] : sub.terms()) result.add_term(q, c * w);
            } else {
                for (const auto& [q, c] : sub.terms()) {
                    std::vector<int> parts = q.parts();
                    parts.push_back(block_sum);
                    result.add_term(Partition(parts), c * w);
                }
            }
            return;
        }
        auto [value, mult] = rest_groups[gi];
        for (int take = 0; take <= mult; ++take) {
            if (take > 0) chosen.insert(chosen.end(), static_cast<size_t>(take), value);
            choose_block(rest_groups, gi + 1, first,
                         ways * Rational(binomial(mult, take)), chosen, rest, result);
            if (take > 0) chosen.erase(chosen.end() - take, chosen.end());
        }
    }

    // --- String reduction ----------------------------------------------------

    KappaPoly psi_sorted(const std::vector<int>& e) {
        auto hit = psi_memo_.find(e);
        if (hit != psi_memo_.end()) return hit->second;

        const int ell = static_cast<int>(e.size());
        const int deg = std::accumulate(e.begin(), e.end(), 0) - ell;
        KappaPoly result(deg, zeta_);

        if (ell == 1 && e[0] == 0) {
            // lone ψ^0: the push-forward of the fundamental class vanishes
        } else if (e.back() > 0) {
            std::vector<int> a(e);
            for (int& x : a) --x;
            result += faber_sorted(a);
        } else {
            // String equation on one ψ^0 factor: delete it and decrement each
            // positive exponent in turn (grouped by value).
            std::vector<int> base(e.begin(), e.end() - 1);
            for (auto [value, mult] : multiset_groups(base)) {
                if (value == 0) continue;
                std::vector<int> next = base;
                auto it = std::find(next.begin(), next.end(), value);
                --*it;
                std::sort(next.begin(), next.end(), std::greater<int>());
                KappaPoly sub = psi_sorted(next);
                if (!sub.is_zero()) result += sub * Rational(mult);
            }
        }
        psi_memo_.emplace(e, result);
        return result;
    }

    // --- Bracket expansion ----------------------------------------------------

    void assign_group(const std::vector<std::pair<int, int>>& groups, size_t gi, int budget,
                      Rational weight, std::vector<int>& exps, KappaPoly& result) {
        if (gi == groups.size()) {
            if (budget == 0) {
                KappaPoly sub = psi_sorted_copy(exps);
                if (!sub.is_zero()) result += sub * weight;
            }
            return;
        }
        auto [value, mult] = groups[gi];
        bool last = gi + 1 == groups.size();
        std::vector<int> ms;
        gen_multisets(mult, budget, budget, ms, [&](const std::vector<int>& chosen, int sum) {
            if (last && sum != budget) return;
            Rational w = weight * pow(Rational(value), sum) * Rational(orderings(chosen));
            size_t before = exps.size();
            exps.insert(exps.end(), chosen.begin(), chosen.end());
            assign_group(groups, gi + 1, budget - sum, w, exps, result);
            exps.resize(before);
        });
    }

    KappaPoly psi_sorted_copy(std::vector<int> e) {
        std::sort(e.begin(), e.end(), std::greater<int>());
        return psi_sorted(e);
    }

    // Number of distinct orderings of a multiset: m!/∏(multiplicities!).
    static BigInt orderings(const std::vector<int>& sorted_desc) {
        BigInt r = factorial(static_cast<long long>(sorted_desc.size()));
        for (auto [v, m] : multiset_groups(sorted_desc)) {
            (void)v;
            r /= factorial(m);
        }
        return r;
    }

    // All multisets of `slots` non-negative integers with sum ≤ max_sum,
    // generated as non-increasing sequences; callback(chosen, sum).
    template <class F>
    static void gen_multisets(int slots, int max_entry, int max_sum, std::vector<int>& acc,
                              const F& cb) {
        if (slots == 0) {
            int s = std::accumulate(acc.begin(), acc.end(), 0);
            cb(acc, s);
            return;
        }
        int used = std::accumulate(acc.begin(), acc.end(), 0);
        int cap = std::min(max_entry, max_sum - used);
        for (int v = cap; v >= 0; --v) {
            acc.push_back(v);
            gen_multisets(slots - 1, v, max_sum, acc, cb);
            acc.pop_back();
        }
    }

    Rational zeta_;
    std::map<std::vector<int>, KappaPoly> faber_memo_;
    std::map<std::vector<int>, KappaPoly> psi_memo_;
};

inline KappaPoly faber_pushforward(const std::vector<int>& a, const Rational& zeta) {
    PushforwardCalculator calc(zeta);
    return calc.faber(a);
}

inline KappaPoly psi_pushforward(const std::vector<int>& e, const Rational& zeta) {
    PushforwardCalculator calc(zeta);
    return calc.psi(e);
}

inline KappaPoly bracket_class(const Partition& p, const Rational& zeta) {
    PushforwardCalculator calc(zeta);
    return calc.bracket(p);
}

// Square matrix over P(d): row p expresses ε_*(ψ^{1+p_1}···ψ^{1+p_ℓ}) in
// κ-monomial coordinates.  Lower triangular with unit diagonal in the
// canonical order, and independent of ζ (every cycle sum is positive).
inline RationalMatrix transform_psi_to_kappa(int d) {
    if (d < 1) throw std::invalid_argument("transform_psi_to_kappa: d must be >= 1");
    std::vector<Partition> index = enumerate(d);
    PushforwardCalculator calc(Rational(0));
    RationalMatrix m(index, index);
    for (int i = 0; i < m.rows(); ++i) {
        KappaPoly row = calc.faber(index[static_cast<size_t>(i)].parts());
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = row.coefficient(index[static_cast<size_t>(j)]);
    }
    return m;
}

// Square matrix over P(d): row p gives bracket_class(p, ζ) in κ-monomial
// coordinates.  Invertibility at the given ζ is checked and a singular
// value is reported as an error.
inline RationalMatrix transform_bracket_to_kappa(int d, const Rational& zeta) {
    if (d < 1) throw std::invalid_argument("transform_bracket_to_kappa: d must be >= 1");
    std::vector<Partition> index = enumerate(d);
    PushforwardCalculator calc(zeta);
    RationalMatrix m(index, index);
    for (int i = 0; i < m.rows(); ++i) {
        KappaPoly row = calc.bracket(index[static_cast<size_t>(i)]);
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = row.coefficient(index[static_cast<size_t>(j)]);
    }
    if (rank(m) < m.rows())
        throw SingularMatrixError("transform_bracket_to_kappa: singular at zeta = " + zeta.str());
    return m;
}

}  // namespace kappa

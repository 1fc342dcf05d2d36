// The rank-analysis apparatus for the κ ring of compact-type moduli:
// relation coefficients C_α^q, the partition-indexed matrices M_δ(d),
// X_δ(d), Y_0(d), L_0(d) = X·Y, the series route to L, the determinant
// closed form, and the relation systems in bracket and κ coordinates.
//
// Conventions baked in here:
//  - Row/column index sets always use the canonical partition order, and
//    P_δ(d) is a prefix of P(d) in that order.
//  - The relations are homogeneous, so the overall per-row normalization
//    sign is dropped; rows agree with hand computation up to row sign.
//  - Y_0 carries the corner convention Y[(1^d),(1^d)] = 1/d (the generic
//    function-sum evaluates to 1 there).  The same 1/d reappears in the
//    series construction of L (q = (1^d) column) and as the factor d in the
//    determinant closed form; the three uses are consistent by det L = ±1.
#pragma once

#include "kappa/matrix.hpp"
#include "kappa/partition.hpp"
#include "kappa/pushforward.hpp"
#include "kappa/rational.hpp"
#include "kappa/series.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kappa {

namespace detail {

// Σ over injections φ: {1..k} → part positions of q of ∏_i q_{φ(i)}^{x_i}.
// Equal parts of q are grouped; choosing among the m_v positions of value v
// in order contributes the falling factorial m_v·(m_v−1)···.
inline Rational injection_sum(const std::vector<int>& exponents, const Partition& q) {
    auto groups = q.multiplicities();
    std::vector<int> used(groups.size(), 0);
    std::function<Rational(size_t)> rec = [&](size_t i) -> Rational {
        if (i == exponents.size()) return Rational(1);
        Rational s(0);
        for (size_t g = 0; g < groups.size(); ++g) {
            int avail = groups[g].second - used[g];
            if (avail <= 0) continue;
            ++used[g];
            s += Rational(avail) * pow(Rational(groups[g].first), exponents[i]) * rec(i + 1);
            --used[g];
        }
        return s;
    };
    return rec(0);
}

}  // namespace detail

// C_α^q = (1/|Aut q|)·∏_i q_i^{q_i}/q_i! · Σ_φ ∏_i q_{φ(i)}^{−α_i}
//         ·∏_{j∉Im φ} (−q_j)^{−1},  φ ranging over injections [m] ↪ [ℓ(q)].
// Pulling the complement product over all of q turns the summand into
// (−1)^{ℓ(q)−m}·∏_j q_j^{−1}·∏_i q_{φ(i)}^{1−α_i}.  Zero when m > ℓ(q).
inline Rational coefficient_C(const AlphaVector& alpha, const Partition& q) {
    const int m = alpha.length();
    const int ell = q.length();
    if (m > ell) return Rational(0);

    Rational pref(1);
    for (int qi : q.parts()) pref *= Rational(int_pow(qi, qi)) / Rational(factorial(qi));
    pref /= Rational(aut_order(q));

    Rational scale = ((ell - m) % 2 != 0) ? Rational(-1) : Rational(1);
    for (int qi : q.parts()) scale /= Rational(qi);

    std::vector<int> exps;
    exps.reserve(alpha.entries.size());
    for (int a : alpha.entries) exps.push_back(1 - a);
    return pref * scale * detail::injection_sum(exps, q);
}

// M_δ(d)[p, q] = C_{α[p]}^q over the ordered set P_δ(d) (rows and columns).
inline RationalMatrix matrix_M(int d, int delta) {
    std::vector<Partition> index = enumerate_P_delta(d, delta);  // validates delta
    return RationalMatrix::build(index, index, [&](const Partition& p, const Partition& q) {
        return coefficient_C(alpha_of(p, d, delta), q);
    });
}

// X_δ(d): M_δ(d) with the column of q divided by (1/|Aut q|)·∏ q_i^{q_i−1}/q_i!.
// Closed form: first row (−1)^{ℓ(q)−1}·d; row p ≠ (1^d) is
// (−1)^{ℓ(q)−ℓ(p̂)}·Σ_φ ∏_i q_{φ(i)}^{2−p̂_i} over injections [ℓ(p̂)] ↪ [ℓ(q)].
inline RationalMatrix matrix_X(int d, int delta) {
    std::vector<Partition> index = enumerate_P_delta(d, delta);
    const Partition ones(std::vector<int>(static_cast<size_t>(d), 1));
    return RationalMatrix::build(index, index, [&](const Partition& p, const Partition& q) {
        if (p == ones) {
            Rational v(d);
            return (q.length() - 1) % 2 != 0 ? -v : v;
        }
        Partition ph = hat(p);
        std::vector<int> exps;
        exps.reserve(static_cast<size_t>(ph.length()));
        for (int pi : ph.parts()) exps.push_back(2 - pi);
        Rational s = detail::injection_sum(exps, q);
        return (q.length() - ph.length()) % 2 != 0 ? -s : s;
    });
}

namespace detail {

// Σ over labeled splittings of the multiset of p's parts into fibers
// S_1,…,S_{ℓ(q)} with sum(S_i) = q_i of
//   ∏_i [ multinomial(q_i; S_i)·q_i^{|S_i|−2}·∏_{s∈S_i} s^{s−1} ]·∏ 1/c_{v,i}! ,
// where c_{v,i} counts the copies of value v placed in fiber i.  (The final
// product is what remains of 1/|Aut p| after summing over the functions
// θ: part positions of p → positions of q with fiber part-sums q_i.)
inline Rational fiber_splitting_sum(const Partition& p, const Partition& q) {
    std::vector<std::pair<int, int>> avail = p.multiplicities();
    const std::vector<int>& fibers = q.parts();

    std::function<Rational(size_t)> fiber_rec = [&](size_t fi) -> Rational {
        if (fi == fibers.size()) {
            for (const auto& [v, c] : avail)
                if (c != 0) return Rational(0);  // parts left over: no splitting
            return Rational(1);
        }
        const int target = fibers[fi];
        Rational total(0);
        // enumerate sub-multisets of `avail` with the target sum
        std::vector<int> take(avail.size(), 0);
        std::function<void(size_t, int)> choose = [&](size_t gi, int remaining) {
            if (gi == avail.size()) {
                if (remaining != 0) return;
                int size = 0;
                Rational w(1);
                for (size_t g = 0; g < avail.size(); ++g) {
                    if (take[g] == 0) continue;
                    size += take[g];
                    const int v = avail[g].first;
                    // multinomial factor 1/ (v!)^take, ∏ v^{(v−1)·take}, 1/c!
                    w *= pow(Rational(factorial(v)), -static_cast<long long>(take[g]));
                    w *= pow(Rational(v), static_cast<long long>(v - 1) * take[g]);
                    w /= Rational(factorial(take[g]));
                }
                w *= Rational(factorial(target));             // multinomial numerator
                w *= pow(Rational(target), size - 2);         // q_i^{|S_i|−2}
                for (size_t g = 0; g < avail.size(); ++g) avail[g].second -= take[g];
                total += w * fiber_rec(fi + 1);
                for (size_t g = 0; g < avail.size(); ++g) avail[g].second += take[g];
                return;
            }
            const int v = avail[gi].first;
            const int cap = std::min(avail[gi].second, v > 0 ? remaining / v : 0);
            for (int t = 0; t <= cap; ++t) {
                take[gi] = t;
                choose(gi + 1, remaining - t * v);
            }
            take[gi] = 0;
        };
        choose(0, target);
        return total;
    };
    return fiber_rec(0);
}

}  // namespace detail

// Y_0(d) over P_0(d): upper triangular; corner [(1^d),(1^d)] = 1/d, all other
// entries (1/|Aut q̂|)·fiber_splitting_sum(p, q).
inline RationalMatrix matrix_Y0(int d) {
    if (d < 2) throw std::invalid_argument("matrix_Y0: d must be >= 2");
    std::vector<Partition> index = enumerate_P_delta(d, 0);
    const Partition ones(std::vector<int>(static_cast<size_t>(d), 1));
    return RationalMatrix::build(index, index, [&](const Partition& p, const Partition& q) {
        if (p == ones && q == ones) return Rational(1, d);
        Rational s = detail::fiber_splitting_sum(p, q);
        return s / Rational(aut_order(hat(q)));
    });
}

// L_0(d) = X_0(d)·Y_0(d): lower triangular with diagonal (−1)^{d−1} at (1^d)
// and ∏_i (−1)^{p̂_i−1}·(−1)^{ℓ(p)−ℓ(p̂)} elsewhere.
inline RationalMatrix matrix_L0(int d) {
    return multiply(matrix_X(d, 0), matrix_Y0(d));
}

// The diagonal the product must have (used by verification suites).
inline Rational L0_diagonal_value(const Partition& p, int d) {
    if (p.length() == d) return d % 2 != 0 ? Rational(1) : Rational(-1);  // (−1)^{d−1}
    Partition ph = hat(p);
    int e = 0;
    for (int v : ph.parts()) e += v - 1;
    e += p.length() - ph.length();
    return e % 2 != 0 ? Rational(-1) : Rational(1);
}

// L via generating functions: with F_β = ⟨exp(−Z_1)·Z_{β_1}···⟩,
//   L[p,q] = (1/|Aut q̂|)·Σ_{γ: [ℓ(p̂)] → [ℓ(q)]} ∏_i Coeff(F_{β(i)}, x^{q_i})·q_i·q_i!
// where β(i) = { p̂_j − 1 : γ(j) = i } and an empty fiber contributes F_∅.
// The row (1^d) uses a single index carrying F_{(0)}.  The q = (1^d) column
// is divided by d: only r = (1^d) meets that column in X·Y, and Y's corner
// is 1/d where the bare function-sum gives 1.
inline RationalMatrix matrix_L_via_series(int d) {
    if (d < 2) throw std::invalid_argument("matrix_L_via_series: d must be >= 2");
    std::vector<Partition> index = enumerate_P_delta(d, 0);
    const Partition ones(std::vector<int>(static_cast<size_t>(d), 1));

    std::map<std::vector<int>, BracketedSeries> f_memo;
    auto coeff_F = [&](std::vector<int> beta, int n) -> Rational {
        std::sort(beta.begin(), beta.end());  // zero (if any) first: valid F shape
        auto it = f_memo.find(beta);
        if (it == f_memo.end()) it = f_memo.emplace(beta, F_series(beta, d)).first;
        return it->second.coeff(n);
    };

    RationalMatrix m(index, index);
    for (int row = 0; row < m.rows(); ++row) {
        const Partition& p = index[static_cast<size_t>(row)];
        const Partition ph = hat(p);
        std::vector<int> lowered;  // p̂ lowered by one: the α entries to distribute
        for (int v : ph.parts()) lowered.push_back(v - 1);
        const bool first_row = (p == ones);
        if (first_row) lowered = {0};

        for (int col = 0; col < m.cols(); ++col) {
            const Partition& q = index[static_cast<size_t>(col)];
            const int nf = q.length();
            std::vector<std::vector<int>> fiber(static_cast<size_t>(nf));
            Rational sum(0);
            std::function<void(size_t)> assign = [&](size_t j) {
                if (j == lowered.size()) {
                    Rational prod(1);
                    for (int i = 0; i < nf; ++i) {
                        int qi = q[i];
                        prod *= coeff_F(fiber[static_cast<size_t>(i)], qi) * Rational(qi) *
                                Rational(factorial(qi));
                        if (prod.is_zero()) return;
                    }
                    sum += prod;
                    return;
                }
                for (int i = 0; i < nf; ++i) {
                    fiber[static_cast<size_t>(i)].push_back(lowered[j]);
                    assign(j + 1);
                    fiber[static_cast<size_t>(i)].pop_back();
                }
            };
            assign(0);
            sum /= Rational(aut_order(hat(q)));
            if (q == ones) sum /= Rational(d);
            m.at(row, col) = sum;
        }
    }
    return m;
}

// Closed form for det X_0(d):
//   d·(−1)^{d−1}·∏_{p ∈ P_0(d), p ≠ (1^d)} (|Aut p̂| / ∏_i p_i^{p_i−2})
//     ·(−1)^{ℓ(p)}·∏_i (−1)^{p̂_i}.
// The factor d is the corner convention Y[(1^d),(1^d)] = 1/d surfacing in
// det X = det L / det Y (det L = ±1); cross-checked against elimination.
inline Rational determinant_formula(int d) {
    if (d < 2) throw std::invalid_argument("determinant_formula: d must be >= 2");
    Rational r = (d - 1) % 2 != 0 ? Rational(-1) : Rational(1);
    r *= Rational(d);
    const Partition ones(std::vector<int>(static_cast<size_t>(d), 1));
    for (const Partition& p : enumerate_P_delta(d, 0)) {
        if (p == ones) continue;
        Partition ph = hat(p);
        Rational f(aut_order(ph));
        int sign_exp = p.length();
        for (int pi : p.parts()) f /= pow(Rational(pi), pi - 2);
        for (int v : ph.parts()) sign_exp += v;
        if (sign_exp % 2 != 0) f = -f;
        r *= f;
    }
    return r;
}

// One relation per p ∈ P_δ(d) (δ = ζ−1−d): Σ_q C_{α[p]}^q·⟨q⟩ = 0, stored
// over the P(d) column set both in bracket coordinates and — via
// transform_bracket_to_kappa — in κ-monomial coordinates.
struct RelationSystem {
    int d = 0;
    int delta = -1;
    long long zeta = 0;
    std::vector<Partition> row_labels;  // P_δ(d); empty when δ ∉ [0, d−2]
    RationalMatrix bracket_rows;
    RationalMatrix kappa_rows;

    RelationSystem(int d_, int delta_, long long zeta_, std::vector<Partition> labels,
                   RationalMatrix bracket, RationalMatrix kappa)
        : d(d_),
          delta(delta_),
          zeta(zeta_),
          row_labels(std::move(labels)),
          bracket_rows(std::move(bracket)),
          kappa_rows(std::move(kappa)) {}

    bool empty() const { return row_labels.empty(); }
};

inline RelationSystem relation_rows_kappa(int d, long long zeta) {
    if (d < 1) throw std::invalid_argument("relation_rows_kappa: d must be >= 1");
    const int delta = static_cast<int>(zeta) - 1 - d;
    std::vector<Partition> cols = enumerate(d);
    if (delta < 0 || delta > d - 2) {
        RationalMatrix none({}, cols);
        return RelationSystem(d, delta, zeta, {}, none, none);
    }
    std::vector<Partition> labels = enumerate_P_delta(d, delta);
    RationalMatrix bracket = RationalMatrix::build(
        labels, cols,
        [&](const Partition& p, const Partition& q) { return coefficient_C(alpha_of(p, d, delta), q); });
    RationalMatrix kappa_rows = multiply(bracket, transform_bracket_to_kappa(d, Rational(zeta)));
    return RelationSystem(d, delta, zeta, std::move(labels), std::move(bracket),
                          std::move(kappa_rows));
}

// The full admissible family: every α = β or (0)∪β with β a partition and
// |α| ≤ d−2−δ.  Exposed for the data-only rank report; the square system
// above uses only α[p].
inline std::vector<AlphaVector> admissible_alphas(int d, int delta) {
    const int bound = d - 2 - delta;
    std::vector<AlphaVector> out;
    if (bound < 0) return out;
    out.push_back(AlphaVector{0});
    for (int s = 1; s <= bound; ++s)
        for (const Partition& beta : enumerate(s)) {
            out.push_back(AlphaVector(beta.parts()));
            std::vector<int> with_zero = beta.parts();
            with_zero.push_back(0);
            out.push_back(AlphaVector(with_zero));
        }
    return out;
}

// Rank of the full admissible family in bracket coordinates (an invertible
// basis change preserves rank, so this equals the κ-coordinate rank).
inline int full_family_rank(int d, long long zeta) {
    const int delta = static_cast<int>(zeta) - 1 - d;
    if (delta < 0 || delta > d - 2) return 0;
    std::vector<Partition> cols = enumerate(d);
    std::vector<AlphaVector> family = admissible_alphas(d, delta);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(family.size());
    for (const AlphaVector& a : family) {
        std::vector<Rational> row;
        row.reserve(cols.size());
        for (const Partition& q : cols) row.push_back(coefficient_C(a, q));
        rows.push_back(std::move(row));
    }
    return detail::echelonize(rows).rank;
}

// Σ_{q ∈ P(d)} C_α^q·d^{ℓ(q)−3}: the comb-graph evaluation that the series
// coefficient Coeff(F_α, x^d) must reproduce (exactly; the empirical global
// sign is +1).
inline Rational comb_graph_sum(const AlphaVector& alpha, int d) {
    Rational s(0);
    for (const Partition& q : enumerate(d))
        s += coefficient_C(alpha, q) * pow(Rational(d), q.length() - 3);
    return s;
}

}  // namespace kappa

// κ-ring computations for a compact-type moduli context (g, n): dimension,
// canonical basis, reduction to basis coordinates, vanishing tests, and the
// genus-0 comparison.  Everything depends on (g, n) only through
// ζ = 2g−2+n, which is what makes the genus-0 comparison structural.
//
// Degree regimes for reduce (d ≥ 1, k = ζ−d):
//   k ≥ d      : the bound is not binding; reduction is the identity embedding.
//   1 ≤ k ≤ d−1: δ = ζ−1−d ∈ [0, d−2]; the κ-coordinate relation rows
//                eliminate exactly the non-basis monomials (the P_δ(d)
//                prefix), whose square block must be nonsingular.
//   k ≤ 0      : the ring vanishes in degree d and no relation family exists
//                here; reduce refuses rather than extrapolate (is_zero
//                answers through the dimension count instead).
#pragma once

#include "kappa/kappa_polynomial.hpp"
#include "kappa/matrix.hpp"
#include "kappa/partition.hpp"
#include "kappa/relations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kappa {

struct ReductionUnavailableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A relation block that theory guarantees nonsingular turned out otherwise,
// or an index bookkeeping assumption broke; never expected at runtime.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

struct RingContext {
    long long g;
    long long n;

    RingContext(long long g_, long long n_) : g(g_), n(n_) {
        if (g < 0) throw std::invalid_argument("RingContext: negative genus");
        if (n < 1) throw std::invalid_argument("RingContext: marking count must be >= 1");
        if (2 * g - 2 + n <= 0) throw std::invalid_argument("RingContext: unstable (2g-2+n <= 0)");
    }

    long long zeta() const { return 2 * g - 2 + n; }
};

// dim κ^d = |P(d, ζ−d)|: 1 at d = 0, 0 once ζ−d ≤ 0.
inline int dimension(const RingContext& ctx, int d) {
    if (d < 0) throw std::invalid_argument("dimension: negative degree");
    if (d == 0) return 1;
    long long k = ctx.zeta() - d;
    if (k <= 0) return 0;
    return static_cast<int>(enumerate_bounded(d, static_cast<int>(std::min<long long>(k, d))).size());
}

// {κ_p : p ∈ P(d, ζ−d)} in canonical order.
inline std::vector<Partition> canonical_basis(const RingContext& ctx, int d) {
    if (d < 0) throw std::invalid_argument("canonical_basis: negative degree");
    long long k = std::max<long long>(ctx.zeta() - d, 0);
    return enumerate_bounded(d, static_cast<int>(std::min<long long>(k, d)));
}

struct BasisExpression {
    long long g = 0;
    long long n = 0;
    int d = 0;
    std::map<Partition, Rational> coords;  // keys in P(d, ζ−d) only

    friend bool operator==(const BasisExpression& a, const BasisExpression& b) {
        return a.g == b.g && a.n == b.n && a.d == b.d && a.coords == b.coords;
    }
};

// Precomputed elimination for one (d, ζ): expresses every non-basis κ_p in
// basis coordinates.  Reusable across many reductions at the same context.
class ReductionPlan {
public:
    ReductionPlan(int d, long long zeta) : d_(d), zeta_(zeta) {
        if (d < 0) throw std::invalid_argument("ReductionPlan: negative degree");
        if (d == 0) {
            basis_ = {Partition{}};
            return;
        }
        const long long k = zeta - d;
        if (k >= d) {
            basis_ = enumerate(d);
            return;
        }
        if (k <= 0)
            throw ReductionUnavailableError(
                "reduce: no relation family exists for 2g-2+n <= d (degree-" + std::to_string(d) +
                " piece vanishes; use is_zero/dimension)");

        basis_ = enumerate_bounded(d, static_cast<int>(k));
        nonbasis_ = enumerate_P_delta(d, static_cast<int>(zeta - 1 - d));
        RelationSystem sys = relation_rows_kappa(d, zeta);
        const int nb = static_cast<int>(nonbasis_.size());
        const int b = static_cast<int>(basis_.size());
        if (sys.kappa_rows.rows() != nb)
            throw InternalConsistencyError("ReductionPlan: relation row count mismatch");
        for (int j = 0; j < b; ++j)
            if (sys.kappa_rows.col_index()[static_cast<size_t>(nb + j)] != basis_[static_cast<size_t>(j)])
                throw InternalConsistencyError("ReductionPlan: column order mismatch");

        // kappa rows = [A | R] with the non-basis prefix square; solve
        // A·E = −R so that κ_{nonbasis_i} = Σ_j E[i][j]·κ_{basis_j}.
        RationalMatrix block(nonbasis_, nonbasis_);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j) block.at(i, j) = sys.kappa_rows.at(i, j);
        std::vector<std::vector<Rational>> rhs(static_cast<size_t>(b),
                                               std::vector<Rational>(static_cast<size_t>(nb)));
        for (int j = 0; j < b; ++j)
            for (int i = 0; i < nb; ++i) rhs[static_cast<size_t>(j)][static_cast<size_t>(i)] = -sys.kappa_rows.at(i, nb + j);
        std::vector<std::vector<Rational>> sol;
        try {
            sol = solve_columns(block, rhs);
        } catch (const SingularMatrixError&) {
            throw InternalConsistencyError(
                "ReductionPlan: the non-basis relation block is singular (contradicts the "
                "nonsingularity certificate)");
        }
        expr_.assign(static_cast<size_t>(nb), std::vector<Rational>(static_cast<size_t>(b)));
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < b; ++j) expr_[static_cast<size_t>(i)][static_cast<size_t>(j)] = sol[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }

    int d() const { return d_; }
    long long zeta() const { return zeta_; }
    const std::vector<Partition>& basis() const { return basis_; }
    const std::vector<Partition>& nonbasis() const { return nonbasis_; }

    std::map<Partition, Rational> apply(const KappaPoly& f) const {
        std::map<Partition, Rational> coords;
        auto add = [&](const Partition& p, const Rational& c) {
            Rational& slot = coords[p];
            slot += c;
            if (slot.is_zero()) coords.erase(p);
        };
        for (const auto& [p, c] : f.terms()) {
            auto bit = std::find(basis_.begin(), basis_.end(), p);
            if (bit != basis_.end()) {
                add(p, c);
                continue;
            }
            auto nit = std::find(nonbasis_.begin(), nonbasis_.end(), p);
            if (nit == nonbasis_.end())
                throw InternalConsistencyError("ReductionPlan: monomial outside P(d)");
            const auto& row = expr_[static_cast<size_t>(nit - nonbasis_.begin())];
            for (size_t j = 0; j < basis_.size(); ++j)
                if (!row[j].is_zero()) add(basis_[j], c * row[j]);
        }
        return coords;
    }

private:
    int d_;
    long long zeta_;
    std::vector<Partition> basis_;
    std::vector<Partition> nonbasis_;
    std::vector<std::vector<Rational>> expr_;
};

inline BasisExpression reduce(const RingContext& ctx, const KappaPoly& f) {
    if (f.degree() < 0) throw std::invalid_argument("reduce: zero placeholder has no degree");
    if (f.zeta() != Rational(ctx.zeta()))
        throw std::invalid_argument("reduce: polynomial zeta does not match the context");
    ReductionPlan plan(f.degree(), ctx.zeta());
    return BasisExpression{ctx.g, ctx.n, f.degree(), plan.apply(f)};
}

inline bool is_zero(const RingContext& ctx, const KappaPoly& f) {
    if (f.is_zero()) return true;
    if (f.zeta() != Rational(ctx.zeta()))
        throw std::invalid_argument("is_zero: polynomial zeta does not match the context");
    if (dimension(ctx, f.degree()) == 0) return true;  // empty coordinate space
    for (const auto& [p, c] : reduce(ctx, f).coords)
        if (!c.is_zero()) return false;
    return true;
}

struct UniversalityReport {
    long long zeta = 0;
    bool genus_zero_verdict = false;  // is_zero on (0, 2g+n)
    bool given_verdict = false;       // is_zero on (g, n)
    bool agree = false;
    std::string structural_note;
};

// Compares the vanishing verdict at (g, n) with the genus-0 context
// (0, 2g+n); the two share ζ, so agreement is structural, not numerical.
inline UniversalityReport universality_check(const KappaPoly& f, long long g, long long n) {
    RingContext given(g, n);
    RingContext genus0(0, 2 * g + n);
    UniversalityReport r;
    r.zeta = given.zeta();
    r.genus_zero_verdict = is_zero(genus0, f);
    r.given_verdict = is_zero(given, f);
    r.agree = r.genus_zero_verdict == r.given_verdict;
    r.structural_note =
        "(0,2g+n) and (g,n) share zeta = 2g-2+n, and the reduction pipeline depends on (g,n) "
        "only through zeta";
    return r;
}

// κ-monomial product: concatenate partition indices and merge; a ring-level
// notion (κ_p·κ_q = κ_{p∪q}), so it lives here and not in the push-forward
// calculus.
inline KappaPoly product(const KappaPoly& a, const KappaPoly& b) {
    if (a.zeta() != b.zeta()) throw std::invalid_argument("product: zeta mismatch");
    KappaPoly r(a.degree() + b.degree(), a.zeta());
    for (const auto& [p, cp] : a.terms())
        for (const auto& [q, cq] : b.terms()) {
            std::vector<int> parts = p.parts();
            parts.insert(parts.end(), q.parts().begin(), q.parts().end());
            r.add_term(Partition(parts), cp * cq);
        }
    return r;
}

inline KappaPoly power(const KappaPoly& f, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    KappaPoly r = KappaPoly::unit(f.zeta());
    for (int i = 0; i < k; ++i) r = product(r, f);
    return r;
}

}  // namespace kappa

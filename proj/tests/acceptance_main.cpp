// Acceptance gate: nine checks, one line of output each, exact arithmetic
// throughout.  Exits nonzero if any check fails.
#include "kappa/kappa.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace kappa;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool pass, const std::string& note = "") {
    std::cout << "criterion " << num << " (" << name << "): " << (pass ? "PASS" : "FAIL");
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

// 1. The degree-6 matrices match their embedded reference entries, quickly.
void criterion_golden() {
    const auto t0 = std::chrono::steady_clock::now();
    RationalMatrix x = matrix_X(6, 0);
    RationalMatrix y = matrix_Y0(6);
    int mismatches = 0;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            if (x.at(i, j) !=
                Rational::parse(golden::kX6[static_cast<size_t>(i)][static_cast<size_t>(j)]))
                ++mismatches;
            if (y.at(i, j) !=
                Rational::parse(golden::kY6[static_cast<size_t>(i)][static_cast<size_t>(j)]))
                ++mismatches;
        }
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    std::ostringstream note;
    note << "200 entries, " << std::fixed << std::setprecision(3) << secs << "s";
    bool pass = mismatches == 0 && secs < 1.0;
    if (mismatches != 0) note << ", " << mismatches << " mismatches";
    report(1, "golden matrices d=6", pass, note.str());
}

// 2. X·Y is lower triangular with the predicted ±1 diagonal, 2 ≤ d ≤ 10.
void criterion_product() {
    std::string bad;
    for (int d = 2; d <= 10 && bad.empty(); ++d) {
        RationalMatrix l = matrix_L0(d);
        for (int i = 0; i < l.rows() && bad.empty(); ++i) {
            for (int j = i + 1; j < l.cols(); ++j)
                if (!l.at(i, j).is_zero()) {
                    bad = "d=" + std::to_string(d) + " not lower triangular";
                    break;
                }
            if (bad.empty() &&
                l.at(i, i) != L0_diagonal_value(l.row_index()[static_cast<size_t>(i)], d))
                bad = "d=" + std::to_string(d) + " wrong diagonal at " +
                      l.row_index()[static_cast<size_t>(i)].str();
        }
    }
    report(2, "product identity d<=10", bad.empty(), bad);
}

// 3. The coefficient matrices have full rank for every delta, 2 ≤ d ≤ 9.
void criterion_nonsingular() {
    std::string bad;
    for (int d = 2; d <= 9 && bad.empty(); ++d)
        for (int delta = 0; delta <= d - 2; ++delta) {
            RationalMatrix m = matrix_M(d, delta);
            if (rank(m) != m.rows()) {
                bad = "d=" + std::to_string(d) + " delta=" + std::to_string(delta);
                break;
            }
        }
    report(3, "nonsingularity d<=9", bad.empty(), bad);
}

// 4. The closed determinant formula equals elimination, 2 ≤ d ≤ 8.
void criterion_determinant() {
    std::string bad;
    for (int d = 2; d <= 8 && bad.empty(); ++d) {
        Rational closed = determinant_formula(d);
        Rational elim = determinant(matrix_X(d, 0));
        if (closed != elim)
            bad = "d=" + std::to_string(d) + ": " + closed.str() + " vs " + elim.str();
    }
    report(4, "determinant formula d<=8", bad.empty(), bad);
}

// 5. The series construction of the product matrix equals X·Y, d ≤ 8.
void criterion_series_matrix() {
    std::string bad;
    for (int d = 2; d <= 8 && bad.empty(); ++d) {
        RationalMatrix direct = matrix_L0(d);
        RationalMatrix via = matrix_L_via_series(d);
        for (int i = 0; i < direct.rows() && bad.empty(); ++i)
            for (int j = 0; j < direct.cols(); ++j)
                if (direct.at(i, j) != via.at(i, j)) {
                    bad = "d=" + std::to_string(d) + " at " +
                          direct.row_index()[static_cast<size_t>(i)].str() + " x " +
                          direct.col_index()[static_cast<size_t>(j)].str();
                    break;
                }
    }
    report(5, "series cross-construction d<=8", bad.empty(), bad);
}

// 6. The generating-function facts: 1−x; the degree bound; the leading
//    coefficient; the one-point recursion.
void criterion_series_identities() {
    std::string bad;

    BracketedSeries fe = F_series({}, 20);
    if (fe.coeff(0) != Rational(1) || fe.coeff(1) != Rational(-1)) bad = "empty series head";
    for (int n = 2; n <= 20 && bad.empty(); ++n)
        if (!fe.coeff(n).is_zero()) bad = "empty series tail at x^" + std::to_string(n);

    if (bad.empty()) {
        std::vector<std::vector<int>> alphas;
        for (int a = 0; a <= 6; ++a) alphas.push_back({a});
        for (int a = 0; a <= 6; ++a)
            for (int b = std::max(a, 1); a + b <= 6; ++b) alphas.push_back({a, b});
        for (int a = 0; a <= 6; ++a)
            for (int b = std::max(a, 1); a + b <= 6; ++b)
                for (int c = b; a + b + c <= 6; ++c) alphas.push_back({a, b, c});
        const int N = 15;
        for (const auto& alpha : alphas) {
            int total = 0;
            for (int v : alpha) total += v;
            BracketedSeries f = F_series(alpha, N);
            for (int n = total + 2; n <= N; ++n)
                if (!f.coeff(n).is_zero()) {
                    bad = "degree bound broken for an alpha of size " +
                          std::to_string(alpha.size());
                    break;
                }
            if (!bad.empty()) break;
        }
    }

    for (int a = 0; a <= 8 && bad.empty(); ++a) {
        BracketedSeries f = F_series({a}, a + 1);
        Rational want(BigInt(1), BigInt(a + 1) * factorial(a + 1));
        if (a % 2 != 0) want = -want;
        if (f.coeff(a + 1) != want) bad = "leading coefficient at a=" + std::to_string(a);
    }

    for (int k = 1; k <= 10 && bad.empty(); ++k)
        if (J_recursive(k) != J_closed(k) ||
            J_closed(k) != Rational(BigInt(1), BigInt(k) * factorial(k)))
            bad = "one-point values at k=" + std::to_string(k);

    report(6, "series identities", bad.empty(), bad);
}

// 7. The string/cycle-sum route equals the one-point-at-a-time route for all
//    exponent vectors with ℓ ≤ 3 and Σe ≤ 8 at three values of ζ.
void criterion_oracle() {
    std::string bad;
    std::vector<std::vector<int>> shapes;
    for (int a = 0; a <= 8; ++a) shapes.push_back({a});
    for (int a = 0; a <= 8; ++a)
        for (int b = a; a + b <= 8; ++b) shapes.push_back({b, a});
    for (int a = 0; a <= 8; ++a)
        for (int b = a; a + b <= 8; ++b)
            for (int c = b; a + b + c <= 8; ++c) shapes.push_back({c, b, a});
    int cases = 0;
    for (const Rational& zeta : {Rational(1), Rational(3), Rational(7, 2)}) {
        PushforwardCalculator calc(zeta);
        for (const auto& e : shapes) {
            ++cases;
            if (!calc.psi(e).same_terms(oracle_pushforward(e, zeta))) {
                std::string es;
                for (int v : e) es += (es.empty() ? "" : ",") + std::to_string(v);
                bad = "zeta=" + zeta.str() + " e=(" + es + ")";
                break;
            }
        }
        if (!bad.empty()) break;
    }
    report(7, "push-forward oracle", bad.empty(),
           bad.empty() ? std::to_string(cases) + " cases" : bad);
}

// 8. Contexts sharing ζ produce identical transforms and reductions.
void criterion_zeta_invariance() {
    std::string bad;
    const std::vector<std::vector<RingContext>> trios = {
        {RingContext(2, 1), RingContext(1, 3), RingContext(0, 5)},
        {RingContext(2, 2), RingContext(1, 4), RingContext(0, 6)},
        {RingContext(3, 1), RingContext(2, 3), RingContext(1, 5), RingContext(0, 7)}};
    for (const auto& trio : trios) {
        const long long zeta = trio[0].zeta();
        const std::string zs = " at zeta=" + std::to_string(zeta);
        for (int d = 1; d <= static_cast<int>(zeta) + 1 && bad.empty(); ++d) {
            for (size_t c = 1; c < trio.size(); ++c) {
                if (dimension(trio[c], d) != dimension(trio[0], d)) {
                    bad = "dimension differs" + zs + " d=" + std::to_string(d);
                    break;
                }
                if (canonical_basis(trio[c], d) != canonical_basis(trio[0], d)) {
                    bad = "basis differs" + zs + " d=" + std::to_string(d);
                    break;
                }
            }
            if (!bad.empty()) break;

            if (d <= 4) {
                bool defined = true;
                RationalMatrix ref({}, {});
                try {
                    ref = transform_bracket_to_kappa(d, Rational(trio[0].zeta()));
                } catch (const SingularMatrixError&) {
                    defined = false;
                }
                for (size_t c = 1; defined && c < trio.size(); ++c)
                    if (!(transform_bracket_to_kappa(d, Rational(trio[c].zeta())) == ref)) {
                        bad = "transform differs" + zs + " d=" + std::to_string(d);
                        break;
                    }
                if (!bad.empty()) break;
            }

            KappaPoly probe(d, Rational(zeta));
            int i = 1;
            for (const Partition& p : enumerate(d)) probe.add_term(p, Rational(i++));
            if (zeta - d >= 1) {
                BasisExpression ref_red = reduce(trio[0], probe);
                for (size_t c = 1; c < trio.size(); ++c)
                    if (reduce(trio[c], probe).coords != ref_red.coords) {
                        bad = "reduction differs" + zs + " d=" + std::to_string(d) +
                              " for (g,n)=(" + std::to_string(trio[c].g) + "," +
                              std::to_string(trio[c].n) + ")";
                        break;
                    }
            } else {
                for (const RingContext& ctx : trio) {
                    bool threw = false;
                    try {
                        reduce(ctx, probe);
                    } catch (const ReductionUnavailableError&) {
                        threw = true;
                    }
                    if (!threw || !is_zero(ctx, probe)) {
                        bad = "out-of-range behavior differs" + zs + " d=" + std::to_string(d);
                        break;
                    }
                }
            }
        }
        if (!bad.empty()) break;
    }
    report(8, "zeta invariance", bad.empty(), bad);
}

// 9. |P(d)| − rank(κ-coordinate relation system) = |P(d, ζ−d)| for
//    3 ≤ ζ ≤ 8, plus the genus-0 dimension table for n ≤ 10.
void criterion_bookkeeping() {
    std::string bad;
    for (long long zeta = 3; zeta <= 8 && bad.empty(); ++zeta)
        for (int d = 2; d <= static_cast<int>(zeta) - 1; ++d) {
            int delta = static_cast<int>(zeta) - 1 - d;
            if (delta < 0 || delta > d - 2) continue;
            RelationSystem sys = relation_rows_kappa(d, zeta);
            int total = static_cast<int>(enumerate(d).size());
            int basis = static_cast<int>(enumerate_bounded(d, static_cast<int>(zeta) - d).size());
            if (total - rank(sys.kappa_rows) != basis) {
                bad = "corank mismatch at zeta=" + std::to_string(zeta) + " d=" + std::to_string(d);
                break;
            }
        }
    for (long long n = 3; n <= 10 && bad.empty(); ++n) {
        RingContext ctx(0, n);
        for (int d = 0; d <= static_cast<int>(ctx.zeta()) + 1; ++d) {
            int k = static_cast<int>(n) - 2 - d;
            int expect = d == 0 ? 1
                                : (k <= 0 ? 0
                                          : static_cast<int>(
                                                enumerate_bounded(d, std::min(k, d)).size()));
            if (dimension(ctx, d) != expect) {
                bad = "genus-0 dimension at n=" + std::to_string(n) + " d=" + std::to_string(d);
                break;
            }
        }
    }
    report(9, "dimension and rank bookkeeping", bad.empty(), bad);
}

}  // namespace

int main() {
    criterion_golden();
    criterion_product();
    criterion_nonsingular();
    criterion_determinant();
    criterion_series_matrix();
    criterion_series_identities();
    criterion_oracle();
    criterion_zeta_invariance();
    criterion_bookkeeping();
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 9 criteria passed" << std::endl;
    return 0;
}

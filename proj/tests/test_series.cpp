#include <catch2/catch_amalgamated.hpp>

#include "kappa/relations.hpp"
#include "kappa/series.hpp"

#include <vector>

using namespace kappa;

TEST_CASE("bracket of a t-monomial") {
    CHECK(bracket_monomial(Partition{}) == Rational(1));
    CHECK(bracket_monomial(Partition{3}) == Rational(1, 9));
    CHECK(bracket_monomial(Partition{2, 1}) == Rational(1, 3));
    CHECK(bracket_monomial(Partition{2, 2}) == Rational(1, 4));
    CHECK(bracket_monomial(Partition{4, 1, 1}) == Rational(1));
    CHECK(bracket_monomial(Partition{1, 1, 1, 1}) == Rational(4));
}

TEST_CASE("building-block series coefficients") {
    TruncatedSeries z1 = Z_series(1, 6);
    CHECK(z1.coefficients().at(1).at(Partition{1}) == Rational(1));
    CHECK(z1.coefficients().at(2).at(Partition{2}) == Rational(1));
    CHECK(z1.coefficients().at(3).at(Partition{3}) == Rational(3, 2));
    CHECK(z1.coefficients().at(4).at(Partition{4}) == Rational(8, 3));

    TruncatedSeries z0 = Z_series(0, 4);
    CHECK(z0.coefficients().at(2).at(Partition{2}) == Rational(2));

    TruncatedSeries z2 = Z_series(2, 4);
    CHECK(z2.coefficients().at(1).at(Partition{1}) == Rational(1));
    CHECK(z2.coefficients().at(3).at(Partition{3}) == Rational(1, 2));
    CHECK(z2.coefficients().at(4).at(Partition{4}) == Rational(2, 3));

    CHECK_THROWS_AS(Z_series(1, 0), std::invalid_argument);
}

TEST_CASE("series exponential") {
    const int N = 8;
    TruncatedSeries minus_z1 = Z_series(1, N);
    minus_z1 *= Rational(-1);
    TruncatedSeries prod = minus_z1.exp() * Z_series(1, N).exp();
    // exp(-Z1)·exp(Z1) = 1 exactly at every truncated order
    REQUIRE(prod.coefficients().size() == 1);
    CHECK(prod.coefficients().at(0).at(Partition{}) == Rational(1));

    CHECK_THROWS_AS(TruncatedSeries::constant(Rational(1), 4).exp(), std::invalid_argument);
}

TEST_CASE("truncation discards overflow products") {
    TruncatedSeries a(8);
    a.add_term(5, Partition{5}, Rational(1));
    TruncatedSeries sq = a * a;  // x^10 > truncation
    CHECK(sq.coefficients().empty());
}

TEST_CASE("empty-index series is one minus x") {
    BracketedSeries f = F_series({}, 20);
    CHECK(f.coeff(0) == Rational(1));
    CHECK(f.coeff(1) == Rational(-1));
    for (int n = 2; n <= 20; ++n) CHECK(f.coeff(n) == Rational(0));
    CHECK_THROWS_AS(f.coeff(21), std::out_of_range);
}

TEST_CASE("zero-index series is x") {
    BracketedSeries f = F_series({0}, 10);
    CHECK(f.coeff(0) == Rational(0));
    CHECK(f.coeff(1) == Rational(1));
    for (int n = 2; n <= 10; ++n) CHECK(f.coeff(n) == Rational(0));
}

TEST_CASE("x d/dx of the empty series cancels the zero-index series") {
    const int N = 10;
    BracketedSeries fe = F_series({}, N);
    BracketedSeries f0 = F_series({0}, N);
    for (int n = 0; n <= N; ++n) CHECK(Rational(n) * fe.coeff(n) + f0.coeff(n) == Rational(0));
}

TEST_CASE("series degree bound on a small family") {
    const int N = 12;
    std::vector<std::vector<int>> alphas;
    for (int a = 0; a <= 4; ++a) alphas.push_back({a});
    for (int a = 0; a <= 4; ++a)
        for (int b = std::max(a, 1); a + b <= 4; ++b) alphas.push_back({a, b});
    for (const auto& alpha : alphas) {
        int total = 0;
        for (int v : alpha) total += v;
        BracketedSeries f = F_series(alpha, N);
        for (int n = total + 2; n <= N; ++n) {
            INFO("alpha length " << alpha.size() << ", |alpha| = " << total << ", n = " << n);
            CHECK(f.coeff(n) == Rational(0));
        }
    }
    CHECK_THROWS_AS(F_series({1, 0}, 5), std::invalid_argument);
    CHECK_THROWS_AS(F_series({-1}, 5), std::invalid_argument);
}

TEST_CASE("leading coefficient of the one-index series") {
    for (int a = 0; a <= 8; ++a) {
        BracketedSeries f = F_series({a}, a + 1);
        Rational want(BigInt(1), BigInt(a + 1) * factorial(a + 1));
        if (a % 2 != 0) want = -want;
        CHECK(f.coeff(a + 1) == want);
        // the same number is ±J_{a+1}
        Rational j = J_closed(a + 1);
        CHECK(f.coeff(a + 1) == (a % 2 != 0 ? -j : j));
    }
}

TEST_CASE("one-point recursion and its closed solution") {
    CHECK(J_closed(1) == Rational(1));
    CHECK(J_recursive(1) == Rational(1));
    for (int k = 1; k <= 10; ++k) {
        CHECK(J_recursive(k) == J_closed(k));
        CHECK(J_closed(k) == Rational(BigInt(1), BigInt(k) * factorial(k)));
    }
    // the recursion itself: k²·J_k = (k−1)·J_{k−1}
    for (int k = 2; k <= 10; ++k)
        CHECK(Rational(k * k) * J_closed(k) == Rational(k - 1) * J_closed(k - 1));
    CHECK_THROWS_AS(J_closed(0), std::invalid_argument);
    CHECK_THROWS_AS(J_recursive(0), std::invalid_argument);
}

TEST_CASE("coefficient sums over partitions match series coefficients") {
    // Σ_q C_α^q·d^{ℓ(q)−3} over q ∈ P(d) equals Coeff(F_α, x^d), the bridge
    // between the localization sum and the generating-function route.
    std::vector<std::vector<int>> alphas;
    for (int a = 0; a <= 6; ++a) alphas.push_back({a});
    for (int a = 0; a <= 6; ++a)
        for (int b = std::max(a, 1); a + b <= 6; ++b) alphas.push_back({a, b});
    for (int a = 0; a <= 6; ++a)
        for (int b = std::max(a, 1); a + b <= 6; ++b)
            for (int c = b; a + b + c <= 6; ++c) alphas.push_back({a, b, c});

    for (const auto& alpha : alphas) {
        BracketedSeries f = F_series(alpha, 8);
        AlphaVector av(alpha);
        for (int d = 1; d <= 8; ++d) {
            INFO("alpha size " << alpha.size() << ", d = " << d);
            CHECK(comb_graph_sum(av, d) == f.coeff(d));
        }
    }
}

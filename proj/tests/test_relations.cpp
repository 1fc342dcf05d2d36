#include <catch2/catch_amalgamated.hpp>

#include "kappa/golden_d6.hpp"
#include "kappa/relations.hpp"
#include "kappa/serialize.hpp"

#include <vector>

using namespace kappa;

namespace {

// The column normalization connecting the raw coefficient matrix to the
// scaling matrix: s(q) = (1/|Aut q|)·∏ q_i^{q_i−1}/q_i!.
Rational column_scale(const Partition& q) {
    Rational s(1);
    for (int qi : q.parts()) s *= pow(Rational(qi), qi - 1) / Rational(factorial(qi));
    return s / Rational(aut_order(q));
}

}  // namespace

TEST_CASE("coefficient values on small partitions") {
    // all-ones column: C_(0)^{(1^d)} = d·(−1)^{d−1}/d!
    for (int d = 1; d <= 6; ++d) {
        Partition ones(std::vector<int>(static_cast<size_t>(d), 1));
        Rational want = Rational(d, 1) / Rational(factorial(d));
        if ((d - 1) % 2 != 0) want = -want;
        CHECK(coefficient_C(AlphaVector{0}, ones) == want);
    }
    CHECK(coefficient_C(AlphaVector{0}, Partition{2}) == Rational(2));
    CHECK(coefficient_C(AlphaVector{1}, Partition{2}) == Rational(1));
    CHECK(coefficient_C(AlphaVector{1}, Partition{1, 1}) == Rational(-1));
    // more slots than parts: no injection exists
    CHECK(coefficient_C(AlphaVector({1, 1, 1}), Partition{3, 3}) == Rational(0));
    CHECK(coefficient_C(AlphaVector({2, 1}), Partition{4}) == Rational(0));
}

TEST_CASE("the scaling matrix is the coefficient matrix with rescaled columns") {
    for (int d = 2; d <= 7; ++d)
        for (int delta : {0, d - 2}) {
            RationalMatrix m = matrix_M(d, delta);
            RationalMatrix x = matrix_X(d, delta);
            REQUIRE(m.col_index() == x.col_index());
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) {
                    Rational s = column_scale(m.col_index()[static_cast<size_t>(j)]);
                    CHECK(x.at(i, j) == m.at(i, j) / s);
                }
        }
}

TEST_CASE("scaling matrix at degree three") {
    RationalMatrix x = matrix_X(3, 0);
    REQUIRE(x.rows() == 2);
    CHECK(x.at(0, 0) == Rational(3));
    CHECK(x.at(0, 1) == Rational(-3));
    CHECK(x.at(1, 0) == Rational(3));
    CHECK(x.at(1, 1) == Rational(-2));
    CHECK(determinant(x) == Rational(3));
    CHECK(determinant(matrix_X(2, 0)) == Rational(-2));
}

TEST_CASE("golden degree-six matrices") {
    RationalMatrix x = matrix_X(6, 0);
    RationalMatrix y = matrix_Y0(6);
    REQUIRE(x.rows() == 10);
    REQUIRE(y.rows() == 10);
    for (int i = 0; i < 10; ++i) {
        CHECK(partition_key(x.row_index()[static_cast<size_t>(i)]) ==
              golden::kOrder6[static_cast<size_t>(i)]);
        for (int j = 0; j < 10; ++j) {
            INFO("row " << i << ", col " << j);
            CHECK(x.at(i, j) ==
                  Rational::parse(golden::kX6[static_cast<size_t>(i)][static_cast<size_t>(j)]));
            CHECK(y.at(i, j) ==
                  Rational::parse(golden::kY6[static_cast<size_t>(i)][static_cast<size_t>(j)]));
        }
    }
}

TEST_CASE("shorter index sets are upper-left blocks") {
    for (int d = 2; d <= 10; ++d) {
        RationalMatrix full = matrix_X(d, 0);
        for (int delta = 1; delta <= d - 2; ++delta) {
            RationalMatrix sub = matrix_X(d, delta);
            REQUIRE(sub.rows() <= full.rows());
            for (int i = 0; i < sub.rows(); ++i) {
                CHECK(sub.row_index()[static_cast<size_t>(i)] ==
                      full.row_index()[static_cast<size_t>(i)]);
                for (int j = 0; j < sub.cols(); ++j) CHECK(sub.at(i, j) == full.at(i, j));
            }
        }
    }
}

TEST_CASE("splitting matrix is upper triangular with the predicted diagonal") {
    for (int d = 2; d <= 10; ++d) {
        RationalMatrix y = matrix_Y0(d);
        CHECK(is_upper_triangular(y));
        const Partition ones(std::vector<int>(static_cast<size_t>(d), 1));
        for (int i = 0; i < y.rows(); ++i) {
            const Partition& p = y.row_index()[static_cast<size_t>(i)];
            if (p == ones) {
                CHECK(y.at(i, i) == Rational(1, d));
            } else {
                Rational want(1);
                for (int pi : p.parts()) want *= pow(Rational(pi), pi - 2);
                want /= Rational(aut_order(hat(p)));
                CHECK(y.at(i, i) == want);
            }
        }
    }
}

TEST_CASE("product of the two matrices is lower triangular with unit-magnitude diagonal") {
    for (int d = 2; d <= 10; ++d) {
        RationalMatrix l = matrix_L0(d);
        CHECK(is_lower_triangular(l));
        Rational diag_product(1);
        for (int i = 0; i < l.rows(); ++i) {
            const Partition& p = l.row_index()[static_cast<size_t>(i)];
            CHECK(l.at(i, i) == L0_diagonal_value(p, d));
            diag_product *= l.at(i, i);
        }
        CHECK(determinant(l) == diag_product);
        CHECK((diag_product == Rational(1) || diag_product == Rational(-1)));
    }
}

TEST_CASE("series construction reproduces the matrix product") {
    for (int d = 2; d <= 6; ++d) {
        RationalMatrix direct = matrix_L0(d);
        RationalMatrix via_series = matrix_L_via_series(d);
        REQUIRE(direct.row_index() == via_series.row_index());
        for (int i = 0; i < direct.rows(); ++i)
            for (int j = 0; j < direct.cols(); ++j) {
                INFO("d = " << d << ", row " << i << ", col " << j);
                CHECK(via_series.at(i, j) == direct.at(i, j));
            }
    }
}

TEST_CASE("closed determinant formula against elimination") {
    for (int d = 2; d <= 8; ++d) {
        INFO("d = " << d);
        CHECK(determinant_formula(d) == determinant(matrix_X(d, 0)));
    }
}

TEST_CASE("coefficient matrices have full rank") {
    for (int d = 2; d <= 9; ++d)
        for (int delta = 0; delta <= d - 2; ++delta) {
            RationalMatrix m = matrix_M(d, delta);
            INFO("d = " << d << ", delta = " << delta);
            CHECK(rank(m) == m.rows());
        }
}

TEST_CASE("relation systems at specific parameters") {
    RelationSystem small = relation_rows_kappa(2, 3);
    REQUIRE(small.row_labels.size() == 1);
    CHECK(small.delta == 0);
    CHECK(rank(small.kappa_rows) == 1);

    RelationSystem six = relation_rows_kappa(6, 7);
    REQUIRE(six.row_labels.size() == 10);
    CHECK(rank(six.kappa_rows) == 10);

    CHECK(relation_rows_kappa(3, 7).empty());  // delta beyond d-2
    CHECK(relation_rows_kappa(3, 3).empty());  // delta below 0
    CHECK(relation_rows_kappa(3, 3).bracket_rows.rows() == 0);
}

TEST_CASE("corank of the relation system equals the basis size") {
    for (long long zeta = 3; zeta <= 8; ++zeta)
        for (int d = 2; d <= static_cast<int>(zeta) - 1; ++d) {
            int delta = static_cast<int>(zeta) - 1 - d;
            if (delta < 0 || delta > d - 2) continue;
            RelationSystem sys = relation_rows_kappa(d, zeta);
            int total = static_cast<int>(enumerate(d).size());
            int basis = static_cast<int>(enumerate_bounded(d, static_cast<int>(zeta) - d).size());
            INFO("zeta = " << zeta << ", d = " << d);
            CHECK(total - rank(sys.kappa_rows) == basis);
            CHECK(total - rank(sys.bracket_rows) == basis);
        }
}

TEST_CASE("kappa rows agree with a direct polynomial expansion") {
    const int d = 4;
    const long long zeta = 6;  // delta = 1
    RelationSystem sys = relation_rows_kappa(d, zeta);
    std::vector<Partition> cols = enumerate(d);
    for (size_t r = 0; r < sys.row_labels.size(); ++r) {
        AlphaVector alpha = alpha_of(sys.row_labels[r], d, sys.delta);
        KappaPoly row(d, Rational(zeta));
        for (const Partition& q : cols) {
            Rational c = coefficient_C(alpha, q);
            if (c.is_zero()) continue;
            KappaPoly b = bracket_class(q, Rational(zeta));
            b *= c;
            row += b;
        }
        for (size_t j = 0; j < cols.size(); ++j)
            CHECK(sys.kappa_rows.at(static_cast<int>(r), static_cast<int>(j)) ==
                  row.coefficient(cols[j]));
    }
}

TEST_CASE("the extended coefficient family adds no rank") {
    for (long long zeta = 3; zeta <= 7; ++zeta)
        for (int d = 2; d <= static_cast<int>(zeta) - 1; ++d) {
            int delta = static_cast<int>(zeta) - 1 - d;
            if (delta < 0 || delta > d - 2) continue;
            int total = static_cast<int>(enumerate(d).size());
            int basis = static_cast<int>(enumerate_bounded(d, static_cast<int>(zeta) - d).size());
            INFO("zeta = " << zeta << ", d = " << d);
            CHECK(full_family_rank(d, zeta) == total - basis);
        }
    CHECK(full_family_rank(3, 3) == 0);  // outside the regime
}

TEST_CASE("enumeration of the admissible exponent vectors") {
    auto fam = admissible_alphas(4, 0);  // bound |alpha| <= 2
    std::vector<std::vector<int>> got;
    for (const auto& a : fam) got.push_back(a.entries);
    // sizes ascending; within a size the canonical partition order (longer
    // first), each beta immediately followed by its zero-augmented variant
    std::vector<std::vector<int>> want = {{0}, {1}, {1, 0}, {1, 1}, {1, 1, 0}, {2}, {2, 0}};
    CHECK(got == want);
    CHECK(admissible_alphas(2, 0).size() == 1);  // only (0)
}

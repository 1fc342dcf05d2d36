// Dense exact-rational matrices carrying partition-labeled row/column indexes.
//
// Triangularity is always judged against the canonical partition order the
// index sets were built with; elimination pivots by nonzero scan in index
// order (no pivot-size heuristics are needed over Q).
#pragma once

#include "kappa/partition.hpp"
#include "kappa/rational.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kappa {

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RationalMatrix {
public:
    RationalMatrix(std::vector<Partition> row_index, std::vector<Partition> col_index)
        : row_index_(std::move(row_index)),
          col_index_(std::move(col_index)),
          e_(row_index_.size() * col_index_.size()) {}

    static RationalMatrix identity(const std::vector<Partition>& index) {
        RationalMatrix m(index, index);
        for (int i = 0; i < m.rows(); ++i) m.at(i, i) = Rational(1);
        return m;
    }

    // Entry-wise construction from a generator on (row partition, col partition).
    static RationalMatrix build(const std::vector<Partition>& row_index,
                                const std::vector<Partition>& col_index,
                                const std::function<Rational(const Partition&, const Partition&)>& f) {
        RationalMatrix m(row_index, col_index);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = f(row_index[i], col_index[j]);
        return m;
    }

    int rows() const { return static_cast<int>(row_index_.size()); }
    int cols() const { return static_cast<int>(col_index_.size()); }

    Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * col_index_.size() + j]; }
    const Rational& at(int i, int j) const {
        return e_[static_cast<size_t>(i) * col_index_.size() + j];
    }

    const std::vector<Partition>& row_index() const { return row_index_; }
    const std::vector<Partition>& col_index() const { return col_index_; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.row_index_ == b.row_index_ && a.col_index_ == b.col_index_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

private:
    std::vector<Partition> row_index_, col_index_;
    std::vector<Rational> e_;
};

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows() || a.col_index() != b.row_index())
        throw std::invalid_argument("multiply: inner index sets do not match");
    RationalMatrix c(a.row_index(), b.col_index());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

inline RationalMatrix transpose(const RationalMatrix& m) {
    RationalMatrix t(m.col_index(), m.row_index());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

namespace detail {

// Row echelon by exact Gaussian elimination, pivoting on the first nonzero
// entry in index order.  Returns (rank, pivot columns, row-swap parity).
struct EchelonResult {
    int rank = 0;
    std::vector<int> pivot_cols;
    int swap_parity = 1;
};

inline EchelonResult echelonize(std::vector<std::vector<Rational>>& m) {
    EchelonResult res;
    if (m.empty()) return res;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            res.swap_parity = -res.swap_parity;
        }
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

inline std::vector<std::vector<Rational>> to_grid(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> g(static_cast<size_t>(m.rows()),
                                         std::vector<Rational>(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j);
    return g;
}

}  // namespace detail

inline int rank(const RationalMatrix& m) {
    auto g = detail::to_grid(m);
    return detail::echelonize(g).rank;
}

inline Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    if (m.rows() == 0) return Rational(1);
    auto g = detail::to_grid(m);
    auto res = detail::echelonize(g);
    if (res.rank < m.rows()) return Rational(0);
    Rational det(res.swap_parity);
    for (int i = 0; i < m.rows(); ++i) det *= g[i][i];
    return det;
}

inline bool is_lower_triangular(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_lower_triangular: non-square matrix");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

inline bool is_upper_triangular(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_upper_triangular: non-square matrix");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

// Solves A·X = B for square nonsingular A (B given column-wise); the engine
// behind solve() and the basis-reduction elimination.
inline std::vector<std::vector<Rational>> solve_columns(
    const RationalMatrix& a, const std::vector<std::vector<Rational>>& b_cols) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve: non-square matrix");
    int n = a.rows();
    int k = static_cast<int>(b_cols.size());
    for (const auto& col : b_cols)
        if (static_cast<int>(col.size()) != n)
            throw std::invalid_argument("solve: right-hand side has wrong length");

    // Augmented elimination [A | B], then back substitution.
    std::vector<std::vector<Rational>> g(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n + k)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g[i][j] = a.at(i, j);
        for (int j = 0; j < k; ++j) g[i][n + j] = b_cols[j][i];
    }
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (!g[i][c].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularMatrixError("solve: singular matrix");
        if (pivot != c) std::swap(g[pivot], g[c]);
        for (int i = c + 1; i < n; ++i) {
            if (g[i][c].is_zero()) continue;
            Rational f = g[i][c] / g[c][c];
            for (int j = c; j < n + k; ++j) g[i][j] -= f * g[c][j];
        }
    }
    std::vector<std::vector<Rational>> x(static_cast<size_t>(k),
                                         std::vector<Rational>(static_cast<size_t>(n)));
    for (int col = 0; col < k; ++col)
        for (int i = n - 1; i >= 0; --i) {
            Rational s = g[i][n + col];
            for (int j = i + 1; j < n; ++j) s -= g[i][j] * x[col][j];
            x[col][i] = s / g[i][i];
        }
    return x;
}

inline std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
    return solve_columns(a, {b})[0];
}

}  // namespace kappa

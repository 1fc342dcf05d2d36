// Truncated formal series in x over Q[t_1, t_2, …] and the bracket
// functional ⟨t_{d_1}···t_{d_k}⟩ = (d_1+…+d_k)^{k−3}, ⟨1⟩ = 1.
//
// t-monomials are canonicalized as partitions (t is commutative); t_j enters
// only through Z_i(x) = Σ_{j≥1} x^j t_j j^{j−i}/j!, so every t_j carries
// x-weight ≥ j and truncation at x^N bounds everything.  The bracket is
// linear but not multiplicative, so it is applied only after the truncated
// product is fully expanded.
#pragma once

#include "kappa/partition.hpp"
#include "kappa/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kappa {

class TruncatedSeries {
public:
    explicit TruncatedSeries(int N) : N_(N) {
        if (N < 0) throw std::invalid_argument("TruncatedSeries: negative truncation order");
    }

    static TruncatedSeries constant(const Rational& c, int N) {
        TruncatedSeries s(N);
        s.add_term(0, Partition{}, c);
        return s;
    }

    int truncation() const { return N_; }
    const std::map<int, std::map<Partition, Rational>>& coefficients() const { return c_; }

    void add_term(int n, const Partition& m, const Rational& c) {
        if (n < 0) throw std::invalid_argument("TruncatedSeries: negative x-power");
        if (n > N_ || c.is_zero()) return;
        Rational& slot = c_[n][m];
        slot += c;
        if (slot.is_zero()) {
            c_[n].erase(m);
            if (c_[n].empty()) c_.erase(n);
        }
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        if (N_ != o.N_) throw std::invalid_argument("TruncatedSeries: truncation mismatch");
        for (const auto& [n, terms] : o.c_)
            for (const auto& [m, c] : terms) add_term(n, m, c);
        return *this;
    }

    TruncatedSeries& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& [n, terms] : c_)
            for (auto& [m, c] : terms) c *= s;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.N_ != b.N_) throw std::invalid_argument("TruncatedSeries: truncation mismatch");
        TruncatedSeries r(a.N_);
        for (const auto& [na, ta] : a.c_) {
            for (const auto& [nb, tb] : b.c_) {
                if (na + nb > a.N_) break;  // x-powers ascend within the map
                for (const auto& [ma, ca] : ta)
                    for (const auto& [mb, cb] : tb) {
                        std::vector<int> parts = ma.parts();
                        parts.insert(parts.end(), mb.parts().begin(), mb.parts().end());
                        r.add_term(na + nb, Partition(parts), ca * cb);
                    }
            }
        }
        return r;
    }

    // exp(this); requires a vanishing constant term so the sum terminates.
    TruncatedSeries exp() const {
        auto it = c_.find(0);
        if (it != c_.end() && !it->second.empty())
            throw std::invalid_argument("TruncatedSeries::exp: nonzero constant term");
        TruncatedSeries result = constant(Rational(1), N_);
        TruncatedSeries power = constant(Rational(1), N_);
        BigInt kfact = 1;
        for (int k = 1; k <= N_; ++k) {
            power = power * (*this);
            kfact *= k;
            TruncatedSeries term = power;
            term *= Rational(BigInt(1), kfact);
            result += term;
        }
        return result;
    }

private:
    int N_;
    std::map<int, std::map<Partition, Rational>> c_;  // x-power -> t-monomial -> coeff
};

// ⟨t_{d_1}···t_{d_k}⟩ = (Σd_i)^{k−3}; the empty monomial is the constant 1.
inline Rational bracket_monomial(const Partition& m) {
    if (m.empty()) return Rational(1);
    return pow(Rational(m.d()), m.length() - 3);
}

// Image of a TruncatedSeries under the bracket: one rational per x-power.
class BracketedSeries {
public:
    explicit BracketedSeries(const TruncatedSeries& s)
        : N_(s.truncation()), coef_(static_cast<size_t>(s.truncation()) + 1) {
        for (const auto& [n, terms] : s.coefficients())
            for (const auto& [m, c] : terms) coef_[static_cast<size_t>(n)] += c * bracket_monomial(m);
    }

    int truncation() const { return N_; }

    Rational coeff(int n) const {
        if (n < 0 || n > N_)
            throw std::out_of_range("BracketedSeries: coefficient beyond truncation order");
        return coef_[static_cast<size_t>(n)];
    }

private:
    int N_;
    std::vector<Rational> coef_;
};

// Z_i(t,x) = Σ_{j=1}^{N} x^j t_j j^{j−i}/j!.
inline TruncatedSeries Z_series(int i, int N) {
    if (N < 1) throw std::invalid_argument("Z_series: truncation order must be >= 1");
    TruncatedSeries z(N);
    for (int j = 1; j <= N; ++j) {
        Rational c = pow(Rational(j), j - i) / Rational(factorial(j));
        z.add_term(j, Partition{j}, c);
    }
    return z;
}

// F_α = ⟨exp(−Z_1)·Z_{α_1}···Z_{α_m}⟩ truncated at x^N.  α may be empty
// (F_∅); otherwise α_1 ≥ 0 and α_i > 0 for i > 1.
inline BracketedSeries F_series(const std::vector<int>& alpha, int N) {
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw std::invalid_argument("F_series: negative alpha entry");
        if (i > 0 && alpha[i] == 0)
            throw std::invalid_argument("F_series: zero alpha entry past the first position");
    }
    TruncatedSeries minus_z1 = Z_series(1, N);
    minus_z1 *= Rational(-1);
    TruncatedSeries product = minus_z1.exp();
    for (int a : alpha) product = product * Z_series(a, N);
    return BracketedSeries(product);
}

// J_k = 1/(k·k!), the closed solution of k²J_k = (k−1)J_{k−1}, J_1 = 1.
inline Rational J_closed(int k) {
    if (k < 1) throw std::invalid_argument("J_closed: k must be >= 1");
    return Rational(BigInt(1), BigInt(k) * factorial(k));
}

inline Rational J_recursive(int k) {
    if (k < 1) throw std::invalid_argument("J_recursive: k must be >= 1");
    Rational j(1);  // J_1
    for (int i = 2; i <= k; ++i) j = Rational(i - 1) * j / Rational(i * i);
    return j;
}

}  // namespace kappa

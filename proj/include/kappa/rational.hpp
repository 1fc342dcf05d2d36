// Exact rational arithmetic for partition-indexed linear algebra.
//
// Rational is a thin value wrapper around boost::multiprecision::cpp_rational:
// always reduced to lowest terms, denominator > 0, no floating point anywhere.
// The serialized form is always "num/den" (including integers, e.g. "3/1").
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kappa {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = BigRat(num);
        v_ /= BigRat(den);  // canonicalizes: reduced, denominator > 0
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "num/den" or a bare integer string.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s));
            return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational::parse: bad input '" + s + "'");
        }
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    std::string str() const { return numerator().str() + "/" + denominator().str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    BigRat v_;
};

inline BigInt int_pow(const BigInt& base, long long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

// base^e with negative exponents allowed (exact rational result).
inline Rational pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (base.is_zero()) {
        if (e < 0) throw std::domain_error("pow: zero base, negative exponent");
        return Rational(0);
    }
    long long k = e < 0 ? -e : e;
    BigInt np = int_pow(base.numerator(), k);
    BigInt dp = int_pow(base.denominator(), k);
    return e > 0 ? Rational(np, dp) : Rational(dp, np);
}

inline BigInt factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// n·(n−1)···(n−k+1)
inline BigInt falling_factorial(long long n, long long k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative length");
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) r *= BigInt(n - i);
    return r;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= i;  // exact at every step: r is a binomial coefficient
    }
    return r;
}

// total! / (parts_1! · parts_2! ···); requires sum(parts) == total.
inline BigInt multinomial(long long total, const std::vector<int>& parts) {
    long long s = 0;
    BigInt denom = 1;
    for (int p : parts) {
        s += p;
        denom *= factorial(p);
    }
    if (s != total) throw std::invalid_argument("multinomial: parts do not sum to total");
    BigInt num = factorial(total);
    return num / denom;
}

}  // namespace kappa

// Homogeneous Q-linear combinations of kappa monomials κ_{p_1}···κ_{p_r}.
//
// κ_0 never appears as an index: it equals ζ = 2g−2+n times the unit and is
// substituted as a rational factor the moment it would arise.  Every stored
// partition key sums to the polynomial's degree; zero coefficients are never
// stored (empty term map = the zero class).
#pragma once

#include "kappa/partition.hpp"
#include "kappa/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace kappa {

class KappaPoly {
public:
    // Degree may be negative only for identically-zero push-forward results
    // (e.g. the image of a lone ψ^0 factor); such a value never accepts terms.
    KappaPoly(int degree, Rational zeta) : degree_(degree), zeta_(std::move(zeta)) {}

    static KappaPoly monomial(const Partition& p, const Rational& zeta,
                              const Rational& coeff = Rational(1)) {
        KappaPoly f(p.d(), zeta);
        f.add_term(p, coeff);
        return f;
    }

    static KappaPoly unit(const Rational& zeta) { return monomial(Partition{}, zeta); }

    int degree() const { return degree_; }
    const Rational& zeta() const { return zeta_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition& p, const Rational& c) {
        if (c.is_zero()) return;
        if (p.d() != degree_)
            throw std::invalid_argument("KappaPoly: term degree " + std::to_string(p.d()) +
                                        " does not match polynomial degree " +
                                        std::to_string(degree_));
        Rational& slot = terms_[p];
        slot += c;
        if (slot.is_zero()) terms_.erase(p);
    }

    KappaPoly& operator+=(const KappaPoly& o) {
        if (o.is_zero()) return *this;
        if (degree_ != o.degree_)
            throw std::invalid_argument("KappaPoly: degree mismatch in addition");
        if (zeta_ != o.zeta_) throw std::invalid_argument("KappaPoly: zeta mismatch in addition");
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }

    KappaPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, c] : terms_) c *= s;
        return *this;
    }

    friend KappaPoly operator+(KappaPoly a, const KappaPoly& b) { return a += b; }
    friend KappaPoly operator*(KappaPoly a, const Rational& s) { return a *= s; }
    friend KappaPoly operator*(const Rational& s, KappaPoly a) { return a *= s; }

    friend bool operator==(const KappaPoly& a, const KappaPoly& b) {
        return a.degree_ == b.degree_ && a.zeta_ == b.zeta_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const KappaPoly& a, const KappaPoly& b) { return !(a == b); }

    // Same linear combination, compared ignoring the recorded degree (used when
    // two routes produce the zero class with different bookkept degrees).
    bool same_terms(const KappaPoly& o) const { return terms_ == o.terms_; }

private:
    int degree_;
    Rational zeta_;
    std::map<Partition, Rational> terms_;  // canonical partition order
};

}  // namespace kappa

// Integer partitions: enumeration, the canonical matrix ordering, and the
// derived partitions used throughout the relation machinery.
//
// Canonical order (used by every matrix row/column index in this library):
// longer partitions first; among equal lengths, lexicographic with larger
// parts first.  Example, d = 6:
//   (1^6), (2,1^4), (3,1^3), (2^2,1^2), (4,1^2), (3,2,1), (2^3),
//   (5,1), (4,2), (3,3), (6).
// The comparator lives here and only here; no other module defines an order.
#pragma once

#include "kappa/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kappa {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int d() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int operator[](int i) const { return parts_.at(static_cast<size_t>(i)); }

    // (value, multiplicity) pairs, values decreasing.
    std::vector<std::pair<int, int>> multiplicities() const {
        std::vector<std::pair<int, int>> m;
        for (int p : parts_) {
            if (!m.empty() && m.back().first == p)
                ++m.back().second;
            else
                m.emplace_back(p, 1);
        }
        return m;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }

private:
    std::vector<int> parts_;  // weakly decreasing, strictly positive
};

// Canonical total order: longer first; equal length -> lexicographic, larger
// parts first.
inline bool canonical_less(const Partition& a, const Partition& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.parts() > b.parts();
}

inline bool operator<(const Partition& a, const Partition& b) { return canonical_less(a, b); }

namespace detail {
inline void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace detail

// All partitions of d in canonical order.  P(0) = {∅}.
inline std::vector<Partition> enumerate(int d) {
    if (d < 0) throw std::invalid_argument("enumerate: negative degree");
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::gen_partitions(d, d == 0 ? 1 : d, acc, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

// P(d, k): partitions of d into at most k parts, canonical order.
inline std::vector<Partition> enumerate_bounded(int d, int k) {
    if (d < 0 || k < 0) throw std::invalid_argument("enumerate_bounded: negative argument");
    std::vector<Partition> out;
    for (const Partition& p : enumerate(d))
        if (p.length() <= k) out.push_back(p);
    return out;
}

// P_δ(d) = P(d) ∖ P(d, δ+1): the partitions of length ≥ δ+2, canonical order.
// These form a prefix of enumerate(d) because the order sorts by length first.
inline std::vector<Partition> enumerate_P_delta(int d, int delta) {
    if (delta < 0 || delta > d - 2)
        throw std::invalid_argument("enumerate_P_delta: delta outside [0, d-2]");
    std::vector<Partition> out;
    for (const Partition& p : enumerate(d))
        if (p.length() >= delta + 2) out.push_back(p);
    return out;
}

// |Aut(p)| = product over distinct part values of (multiplicity)!.
inline BigInt aut_order(const Partition& p) {
    BigInt r = 1;
    for (auto [value, count] : p.multiplicities()) {
        (void)value;
        r *= factorial(count);
    }
    return r;
}

// p̂: p with all parts equal to 1 removed.
inline Partition hat(const Partition& p) {
    std::vector<int> parts;
    for (int v : p.parts())
        if (v != 1) parts.push_back(v);
    return Partition(parts);
}

// p⁻: every part lowered by 1, zero parts discarded.
inline Partition minus(const Partition& p) {
    std::vector<int> parts;
    for (int v : p.parts())
        if (v > 1) parts.push_back(v - 1);
    return Partition(parts);
}

// Exponent vector for the relation coefficients: non-empty, entries ≥ 0 with
// at most one zero, stored weakly decreasing.  Context condition (i):
// |α| ≤ d−2−δ.  All consumers are invariant under reordering the entries.
struct AlphaVector {
    std::vector<int> entries;

    explicit AlphaVector(std::vector<int> e) : entries(std::move(e)) {
        if (entries.empty()) throw std::invalid_argument("AlphaVector: empty");
        int zeros = 0;
        for (int a : entries) {
            if (a < 0) throw std::invalid_argument("AlphaVector: negative entry");
            if (a == 0) ++zeros;
        }
        if (zeros > 1) throw std::invalid_argument("AlphaVector: more than one zero entry");
        std::sort(entries.begin(), entries.end(), std::greater<int>());
    }
    AlphaVector(std::initializer_list<int> e) : AlphaVector(std::vector<int>(e)) {}

    int total() const { return std::accumulate(entries.begin(), entries.end(), 0); }
    int length() const { return static_cast<int>(entries.size()); }

    void check_context(int d, int delta) const {
        if (total() > d - 2 - delta)
            throw std::invalid_argument("AlphaVector: |alpha| exceeds d-2-delta");
    }
};

// α[p] for p ∈ P_δ(d): (0) for p = (1^d), otherwise p⁻.
inline AlphaVector alpha_of(const Partition& p, int d, int delta) {
    if (delta < 0 || delta > d - 2)
        throw std::invalid_argument("alpha_of: delta outside [0, d-2]");
    if (p.d() != d || p.length() < delta + 2)
        throw std::invalid_argument("alpha_of: partition not in P_delta(d)");
    Partition m = minus(p);
    AlphaVector a(m.empty() ? std::vector<int>{0} : m.parts());
    a.check_context(d, delta);
    return a;
}

}  // namespace kappa

// JSON and CSV serialization.  Rationals are always the string "num/den"
// (including integers: "3/1"); partitions are decreasing integer arrays,
// the empty partition is [].  Insertion-ordered JSON keeps every emission
// byte-stable across runs and across cache hits and misses.
#pragma once

#include "kappa/kappa_polynomial.hpp"
#include "kappa/matrix.hpp"
#include "kappa/partition.hpp"
#include "kappa/rational.hpp"
#include "kappa/ring.hpp"
#include "kappa/series.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kappa {

using ojson = nlohmann::ordered_json;

inline ojson partition_to_json(const Partition& p) { return ojson(p.parts()); }

// Compact array form used as a JSON object key, e.g. "[3,2,1]", "[]".
inline std::string partition_key(const Partition& p) { return partition_to_json(p).dump(); }

inline Partition partition_from_json(const ojson& j) {
    if (!j.is_array()) throw std::invalid_argument("partition_from_json: expected an array");
    return Partition(j.get<std::vector<int>>());
}

inline Partition partition_from_key(const std::string& key) {
    return partition_from_json(ojson::parse(key));
}

inline ojson matrix_to_json(const std::string& kind, int d, int delta, const RationalMatrix& m) {
    ojson j;
    j["kind"] = kind;
    j["d"] = d;
    j["delta"] = delta;
    ojson order = ojson::array();
    for (const Partition& p : m.row_index()) order.push_back(partition_to_json(p));
    j["order"] = order;
    ojson entries = ojson::array();
    for (int i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (int jcol = 0; jcol < m.cols(); ++jcol) row.push_back(m.at(i, jcol).str());
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

inline RationalMatrix matrix_from_json(const ojson& j) {
    std::vector<Partition> index;
    for (const auto& row : j.at("order")) index.push_back(partition_from_json(row));
    RationalMatrix m(index, index);
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != m.rows())
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    for (int i = 0; i < m.rows(); ++i) {
        const auto& row = entries.at(static_cast<size_t>(i));
        if (static_cast<int>(row.size()) != m.cols())
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (int c = 0; c < m.cols(); ++c)
            m.at(i, c) = Rational::parse(row.at(static_cast<size_t>(c)).get<std::string>());
    }
    return m;
}

// CSV: header row of quoted column labels, then one row per label with its
// entries in "num/den" form.  Labels are quoted because they contain commas.
inline std::string matrix_to_csv(const RationalMatrix& m) {
    std::string out = "\"\"";
    for (const Partition& q : m.col_index()) out += ",\"" + partition_key(q) + "\"";
    out += "\n";
    for (int i = 0; i < m.rows(); ++i) {
        out += "\"" + partition_key(m.row_index()[static_cast<size_t>(i)]) + "\"";
        for (int j = 0; j < m.cols(); ++j) out += "," + m.at(i, j).str();
        out += "\n";
    }
    return out;
}

inline ojson kappa_poly_to_json(const KappaPoly& f) {
    ojson j;
    j["degree"] = f.degree();
    j["zeta"] = f.zeta().str();
    ojson terms = ojson::object();
    for (const auto& [p, c] : f.terms()) terms[partition_key(p)] = c.str();
    j["terms"] = terms;
    return j;
}

inline KappaPoly kappa_poly_from_json(const ojson& j) {
    KappaPoly f(j.at("degree").get<int>(), Rational::parse(j.at("zeta").get<std::string>()));
    for (const auto& [key, val] : j.at("terms").items())
        f.add_term(partition_from_key(key), Rational::parse(val.get<std::string>()));
    return f;
}

inline ojson basis_expression_to_json(const BasisExpression& e) {
    ojson j;
    j["g"] = e.g;
    j["n"] = e.n;
    j["d"] = e.d;
    ojson coords = ojson::object();
    for (const auto& [p, c] : e.coords) coords[partition_key(p)] = c.str();
    j["coords"] = coords;
    return j;
}

inline ojson series_to_json(const std::vector<int>& alpha, const BracketedSeries& s) {
    ojson j;
    j["alpha"] = alpha;
    j["N"] = s.truncation();
    ojson coeffs = ojson::object();
    for (int n = 0; n <= s.truncation(); ++n) coeffs[std::to_string(n)] = s.coeff(n).str();
    j["coefficients"] = coeffs;
    return j;
}

inline std::string series_to_csv(const BracketedSeries& s) {
    std::string out = "n,coefficient\n";
    for (int n = 0; n <= s.truncation(); ++n)
        out += std::to_string(n) + "," + s.coeff(n).str() + "\n";
    return out;
}

inline ojson partitions_to_json(const std::vector<Partition>& list) {
    ojson arr = ojson::array();
    for (const Partition& p : list) arr.push_back(partition_to_json(p));
    return arr;
}

inline std::string partitions_to_csv(const std::vector<Partition>& list) {
    std::string out = "partition\n";
    for (const Partition& p : list) out += "\"" + partition_key(p) + "\"\n";
    return out;
}

// The one rendering used for every JSON document the CLI or the cache emits.
inline std::string render_json(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace kappa

// On-disk cache for the ζ-independent matrices, keyed by (kind, d, δ).
// Layout: <dir>/<kind>_d<d>_delta<δ>.json, one JSON document per matrix in
// the standard serialization.  Writes go to a temporary file in the same
// directory followed by an atomic rename, so a reader never sees a partial
// document.  The cache is purely an optimization: hits must re-serialize to
// the exact bytes a fresh computation would produce.
#pragma once

#include "kappa/matrix.hpp"
#include "kappa/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kappa {

class MatrixCache {
public:
    MatrixCache() = default;  // disabled
    explicit MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }
    const std::filesystem::path& dir() const { return dir_; }

    std::filesystem::path entry_path(const std::string& kind, int d, int delta) const {
        return dir_ / (kind + "_d" + std::to_string(d) + "_delta" + std::to_string(delta) + ".json");
    }

    RationalMatrix load_or_compute(const std::string& kind, int d, int delta,
                                   const std::function<RationalMatrix()>& compute) const {
        if (!enabled()) return compute();
        std::filesystem::path path = entry_path(kind, d, delta);
        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            if (in) {
                ojson j = ojson::parse(in, nullptr, /*allow_exceptions=*/false);
                if (!j.is_discarded()) return matrix_from_json(j);
            }
            // unreadable or corrupt entry: fall through and rewrite it
        }
        RationalMatrix m = compute();
        store(kind, d, delta, m);
        return m;
    }

    void store(const std::string& kind, int d, int delta, const RationalMatrix& m) const {
        if (!enabled()) return;
        std::filesystem::create_directories(dir_);
        std::filesystem::path path = entry_path(kind, d, delta);
        std::filesystem::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) throw std::runtime_error("MatrixCache: cannot write " + tmp.string());
            out << render_json(matrix_to_json(kind, d, delta, m));
        }
        std::filesystem::rename(tmp, path);  // atomic publish
    }

    std::vector<std::string> list() const {
        std::vector<std::string> names;
        if (!enabled() || !std::filesystem::exists(dir_)) return names;
        for (const auto& entry : std::filesystem::directory_iterator(dir_))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                names.push_back(entry.path().filename().string());
        std::sort(names.begin(), names.end());
        return names;
    }

    int clear() const {
        int removed = 0;
        if (!enabled() || !std::filesystem::exists(dir_)) return removed;
        for (const std::string& name : list()) {
            std::filesystem::remove(dir_ / name);
            ++removed;
        }
        return removed;
    }

private:
    std::filesystem::path dir_;
};

}  // namespace kappa

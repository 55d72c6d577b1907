#pragma once

// Persistent store for computed invariants.  The cache file format is one
// record per line, "<key> = <rational>", sorted by key, preceded by a header
// carrying a fingerprint of the initial data.  A cache whose fingerprint does
// not match (or which fails to parse) is discarded and recomputed, never
// trusted.  Saves are atomic: write to a temporary file, then rename.

#include "sym2gw/gw_base.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>

namespace sym2gw {

namespace detail {
inline void fnv64_feed(std::uint64_t& h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
}
}  // namespace detail

// Deterministic digest of everything the computed values depend on: basis
// grading, structure constants, two-point table, Bernoulli convention.
inline std::string initial_data_fingerprint() {
    static const std::string fp = [] {
        std::ostringstream os;
        os << "basis:";
        for (int i = 0; i < orb::kDim; ++i) os << orb::degree(i) << (orb::is_twisted(i) ? "t" : "u") << ";";
        os << "sc:";
        for (int i = 0; i < orb::kDim; ++i)
            for (int j = 0; j < orb::kDim; ++j)
                for (int m = 0; m < orb::kDim; ++m)
                    os << orb::structure_constants()[i][j][m].str() << ",";
        os << "2pt:6,0,9,1;bernoulli:B1=-1/2;";
        std::uint64_t h = 0xcbf29ce484222325ULL;
        detail::fnv64_feed(h, os.str());
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
        return std::string(buf);
    }();
    return fp;
}

class InvariantStore {
public:
    InvariantStore() : fingerprint_(initial_data_fingerprint()) {}

    std::optional<Rational> lookup(const InvariantKey& key) const {
        std::shared_lock lock(mu_);
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const InvariantKey& key) const {
        std::shared_lock lock(mu_);
        return values_.find(key) != values_.end();
    }

    void insert(const InvariantKey& key, const Rational& value) {
        std::unique_lock lock(mu_);
        values_.emplace(key, value);  // values are final; re-inserts keep the first
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return values_.size();
    }

    std::map<InvariantKey, Rational> snapshot() const {
        std::shared_lock lock(mu_);
        return values_;
    }

    const std::string& fingerprint() const { return fingerprint_; }

    std::string serialize() const {
        std::ostringstream os;
        os << "# sym2gw invariant cache v1\n";
        os << "# fingerprint " << fingerprint_ << "\n";
        std::shared_lock lock(mu_);
        for (const auto& [key, value] : values_) os << key.str() << " = " << value.str() << "\n";
        return os.str();
    }

    void save(const std::filesystem::path& path) const {
        std::filesystem::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
            out << serialize();
        }
        std::filesystem::rename(tmp, path);
    }

    // Returns false (leaving the store untouched) for a missing file, a
    // fingerprint mismatch, or any parse failure.
    bool load(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) return false;
        std::string line;
        if (!std::getline(in, line) || line != "# sym2gw invariant cache v1") return false;
        if (!std::getline(in, line) || line != "# fingerprint " + fingerprint_) return false;
        std::map<InvariantKey, Rational> parsed;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto eq = line.find(" = ");
            if (eq == std::string::npos) return false;
            try {
                InvariantKey key = InvariantKey::parse(line.substr(0, eq));
                Rational value = Rational::parse(line.substr(eq + 3));
                parsed.emplace(std::move(key), std::move(value));
            } catch (const std::exception&) {
                return false;
            }
        }
        std::unique_lock lock(mu_);
        for (auto& [k, v] : parsed) values_.emplace(k, v);
        return true;
    }

private:
    mutable std::shared_mutex mu_;
    std::map<InvariantKey, Rational> values_;
    std::string fingerprint_;
};

}  // namespace sym2gw

#pragma once

#include "bmw/combinatorics.hpp"
#include "bmw/factored.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace bmw {

inline constexpr const char* kToolVersion = "bmw 0.1.0";

// One JSON file per n holding every cached determinant of Lambda_n.
class DetCache {
public:
    // $BMW_CACHE_DIR, else $XDG_CACHE_HOME/bmw, else $HOME/.cache/bmw
    static std::filesystem::path defaultDir();
    explicit DetCache(std::filesystem::path dir = defaultDir()) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path fileFor(int n) const;

    // missing, unreadable or foreign-version files give an empty map
    std::map<std::string, FactoredValue> load(int n) const;
    // merges into the existing file; whole-file write via temp file + rename
    void store(int n, const std::map<std::string, FactoredValue>& records) const;

private:
    std::filesystem::path dir_;
};

}  // namespace bmw

#include "bmw/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <stdexcept>

namespace bmw {

namespace fs = std::filesystem;

fs::path DetCache::defaultDir() {
    if (const char* d = std::getenv("BMW_CACHE_DIR"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "bmw";
    if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "bmw";
    return fs::temp_directory_path() / "bmw-cache";
}

fs::path DetCache::fileFor(int n) const { return dir_ / ("gram-n" + std::to_string(n) + ".json"); }

std::map<std::string, FactoredValue> DetCache::load(int n) const {
    std::map<std::string, FactoredValue> out;
    std::ifstream in(fileFor(n));
    if (!in) return out;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.value("toolVersion", "") != kToolVersion || j.value("n", -1) != n) return out;
        for (auto& [k, v] : j.at("records").items()) out.emplace(k, FactoredValue::fromJson(v));
    } catch (const std::exception&) {
        out.clear();  // corrupt file: behave as a miss
    }
    return out;
}

void DetCache::store(int n, const std::map<std::string, FactoredValue>& records) const {
    auto merged = load(n);
    for (auto& [k, v] : records) merged.insert_or_assign(k, v);
    nlohmann::json j;
    j["toolVersion"] = kToolVersion;
    j["n"] = n;
    j["records"] = nlohmann::json::object();
    for (auto& [k, v] : merged) j["records"][k] = v.toJson();

    fs::create_directories(dir_);
    std::random_device rd;
    fs::path tmp = fileFor(n);
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << j.dump() << "\n";
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, fileFor(n));
}

}  // namespace bmw

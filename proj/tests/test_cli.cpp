#include "bmw/cache.hpp"
#include "bmw/cli.hpp"

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace bmw;
namespace fs = std::filesystem;

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run bmwRun(std::vector<std::string> args) {
    args.insert(args.begin(), "bmw");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = runCommand((int)argv.size(), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempCache {
    fs::path dir;
    TempCache() {
        dir = fs::temp_directory_path() / ("bmw-test-" + std::to_string(std::rand()) + std::to_string(::getpid()));
        fs::remove_all(dir);
        setenv("BMW_CACHE_DIR", dir.c_str(), 1);
    }
    ~TempCache() { fs::remove_all(dir); }
};
}  // namespace

TEST_CASE("dims") {
    auto r = bmwRun({"dims", "--n", "4", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["cells"].size() == 8);
    CHECK(j["sum_dim_squared"] == 105);
}

TEST_CASE("gram and the cache") {
    TempCache tc;
    auto r = bmwRun({"gram", "--n", "3", "--f", "1", "--lambda", "1", "--factored"});
    CHECK(r.code == 0);
    CHECK(r.out == "det G_{1,(1)} n=3 dim=3: r^-3*q^5 * (r-q^-3) * (r-1)^2 * (r+1)^2 * (r+q^3) * (q^2-1)^-3\n");
    CHECK(fs::exists(tc.dir / "gram-n3.json"));
    auto again = bmwRun({"gram", "--n", "3", "--f", "1", "--lambda", "1", "--factored"});
    CHECK(again.out == r.out);
    auto pure = bmwRun({"gram", "--n", "3", "--f", "1", "--lambda", "1", "--factored", "--no-cache"});
    CHECK(pure.out == r.out);

    auto j = nlohmann::json::parse(bmwRun({"gram", "--n", "3", "--f", "1", "--lambda", "1", "--json"}).out);
    CHECK(j["lambda"] == "1");
    CHECK(j["dim"] == 3);
    CHECK(j["unit"]["e_q"] == 5);
    CHECK(j["factors"][0]["atom"] == "r-q^-3");

    // tamper with the cached value
    DetCache cache(tc.dir);
    auto recs = cache.load(3);
    REQUIRE(recs.count("1|1"));
    recs["1|1"] = recs["1|1"] * FactoredValue::fromUnit(-1);
    cache.store(3, recs);
    CHECK(bmwRun({"gram", "--n", "3", "--f", "1", "--lambda", "1", "--verify-cache"}).code == kMismatch);
}

TEST_CASE("cache files") {
    TempCache tc;
    DetCache cache(tc.dir);
    CHECK(cache.load(4).empty());
    std::map<std::string, FactoredValue> recs{{"0|4", FactoredValue::fromAtom(Atom::qint(3))}};
    cache.store(4, recs);
    cache.store(4, {{"0|3,1", FactoredValue::fromAtom(Atom::qint(2), 3)}});
    auto back = cache.load(4);
    CHECK(back.size() == 2);
    CHECK(back["0|4"] == FactoredValue::fromAtom(Atom::qint(3)));
    for (auto& e : fs::directory_iterator(tc.dir)) CHECK(e.path().extension() == ".json");
    {
        std::ofstream bad(cache.fileFor(5));
        bad << "{not json";
    }
    CHECK(cache.load(5).empty());
}

TEST_CASE("gram-all with jobs matches sequential") {
    TempCache tc;
    auto a = bmwRun({"gram-all", "--n", "4", "--factored", "--no-cache"});
    auto b = bmwRun({"gram-all", "--n", "4", "--factored", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("eval") {
    TempCache tc;
    auto r = bmwRun({"eval", "--n", "3", "--f", "1", "--lambda", "1", "--r", "q^-1", "--json", "--no-cache"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["value"] == "q^4 + 1");
    r = bmwRun({"eval", "--n", "3", "--f", "1", "--lambda", "1", "--q", "2", "--r", "3", "--char", "7", "--json"});
    CHECK(nlohmann::json::parse(r.out)["value"] == "4");
    r = bmwRun({"eval", "--n", "3", "--f", "1", "--lambda", "1", "--q", "1", "--r", "3"});
    CHECK(r.code == kComputation);
}

TEST_CASE("semisimple") {
    auto r = bmwRun({"semisimple", "--n", "4", "--r", "-q"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["semisimple"] == false);
    CHECK(j["clause"] == "b1");
    j = nlohmann::json::parse(bmwRun({"semisimple", "--n", "3", "--r", "generic"}).out);
    CHECK(j["semisimple"] == true);
    CHECK(j["witness"].is_null());
    j = nlohmann::json::parse(bmwRun({"semisimple", "--n", "3", "--r", "numeric:2,3", "--char", "7"}).out);
    CHECK(j["semisimple"] == false);
    CHECK(bmwRun({"semisimple", "--n", "3", "--qorder", "1"}).code == kUsage);
}

TEST_CASE("certify and table") {
    TempCache tc;
    auto r = bmwRun({"certify", "--n", "3", "--json", "--jobs", "2"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["cells"].size() == 4);
    auto t = bmwRun({"table", "--max-n", "5", "--json"});
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["pass"] == true);
}

TEST_CASE("usage errors") {
    CHECK(bmwRun({}).code == kUsage);
    CHECK(bmwRun({"gram", "--n", "3", "--bogus"}).code == kUsage);
    CHECK(bmwRun({"gram", "--n", "3", "--f", "1", "--lambda", "2"}).code == kUsage);
    CHECK(bmwRun({"gram", "--n", "3", "--f", "1", "--lambda", "x"}).code == kUsage);
    CHECK(bmwRun({"frobnicate"}).code == kUsage);
    CHECK(bmwRun({"--help"}).code == 0);
}

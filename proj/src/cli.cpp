#include "bmw/cli.hpp"

#include "bmw/cache.hpp"
#include "bmw/gram.hpp"
#include "bmw/numeric.hpp"
#include "bmw/semisimple.hpp"
#include "bmw/seminormal.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

namespace bmw {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    int n = -1;
    int f = -1;
    std::string lambda;
    bool lambdaGiven = false;
    bool json = false;
    bool factored = false;
    std::string q, r;
    unsigned long characteristic = 0;
    std::string qorder = "inf";
    int jobs = 1;
    bool noCache = false;
    bool verifyCache = false;
    int maxN = 6;
};

json number(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

CellLabel cellFrom(const Opts& o) {
    if (o.n < 0) throw UsageError("--n is required");
    Partition lam;
    try {
        lam = parsePartition(o.lambda);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
    }
    int f = o.f;
    if (f < 0) {
        if (o.n % 2 == 1 && !o.lambdaGiven) throw UsageError("--f or --lambda is required");
        f = (o.n - size(lam)) / 2;
    }
    if (!o.lambdaGiven && 2 * f != o.n) throw UsageError("--lambda is required unless --f is n/2");
    if (size(lam) + 2 * f != o.n) throw UsageError("(f, lambda) is not a cell of Lambda_n");
    return CellLabel{f, lam};
}

CellLabel parseCellKey(const std::string& k) {
    auto bar = k.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("bad cache key");
    return CellLabel{std::stoi(k.substr(0, bar)), parsePartition(k.substr(bar + 1))};
}

template <class F>
void parallelFor(size_t count, int jobs, F body) {
    std::atomic<size_t> next{0};
    std::exception_ptr firstError;
    std::mutex m;
    auto worker = [&] {
        for (size_t i; (i = next++) < count;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(m);
                if (!firstError) firstError = std::current_exception();
            }
        }
    };
    int k = std::max(1, std::min<int>(jobs, (int)count));
    std::vector<std::thread> pool;
    for (int t = 1; t < k; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (firstError) std::rethrow_exception(firstError);
}

// determinant lookup through the on-disk cache
class Session {
public:
    explicit Session(const Opts& o) : useCache_(!o.noCache), verify_(o.verifyCache) {}

    FactoredValue det(int n, const CellLabel& c) {
        std::string key = cellStr(c);
        std::optional<FactoredValue> hit;
        if (useCache_) {
            std::lock_guard<std::mutex> lk(m_);
            auto& recs = loadedLocked(n);
            if (auto it = recs.find(key); it != recs.end()) hit = it->second;
            if (hit && !verify_) return *hit;
            if (!verify_) seedLowerLocked(n);
        }
        FactoredValue v = gramDetRecursive(n, c.f, c.lambda).value;
        if (verify_ && hit && *hit != v)
            throw Mismatch("cache entry n=" + std::to_string(n) + " cell " + key + " differs from recomputation");
        if (useCache_) {
            std::lock_guard<std::mutex> lk(m_);
            dirty_[n][key] = v;
            loaded_[n][key] = v;
        }
        return v;
    }

    void flush() {
        if (!useCache_) return;
        for (auto& [n, recs] : dirty_) cache_.store(n, recs);
        dirty_.clear();
    }

private:
    std::map<std::string, FactoredValue>& loadedLocked(int n) {
        auto it = loaded_.find(n);
        if (it == loaded_.end()) it = loaded_.emplace(n, cache_.load(n)).first;
        return it->second;
    }
    void seedLowerLocked(int n) {
        for (int m = seededUpTo_ + 1; m < n; ++m)
            for (auto& [k, v] : loadedLocked(m)) {
                try {
                    seedDeterminant(parseCellKey(k), v);
                } catch (const std::exception&) {
                }
            }
        seededUpTo_ = std::max(seededUpTo_, n - 1);
    }

    bool useCache_, verify_;
    DetCache cache_;
    std::mutex m_;
    std::map<int, std::map<std::string, FactoredValue>> loaded_, dirty_;
    int seededUpTo_ = 0;
};

json detRecord(int n, const CellLabel& c, const FactoredValue& v) {
    json j = v.toJson();
    j["n"] = n;
    j["f"] = c.f;
    j["lambda"] = partitionStr(c.lambda);
    j["dim"] = number(cellDim(n, c.f, c.lambda));
    return j;
}

std::string detTitle(int n, const CellLabel& c) {
    std::string lam = c.lambda.empty() ? "∅" : "(" + partitionStr(c.lambda) + ")";
    return "det G_{" + std::to_string(c.f) + "," + lam + "} n=" + std::to_string(n);
}

void printDet(std::ostream& out, const Opts& o, int n, const CellLabel& c, const FactoredValue& v) {
    if (o.json) {
        out << detRecord(n, c, v).dump() << "\n";
        return;
    }
    out << detTitle(n, c) << " dim=" << cellDim(n, c.f, c.lambda).get_str() << ": "
        << (o.factored ? v.render() : v.expand().str()) << "\n";
}

int cmdDims(const Opts& o, std::ostream& out) {
    if (o.n < 0) throw UsageError("--n is required");
    mpz_class sum = 0;
    json cells = json::array();
    for (auto& c : cellLabels(o.n)) {
        mpz_class d = cellDim(o.n, c.f, c.lambda);
        sum += d * d;
        cells.push_back({{"f", c.f}, {"lambda", partitionStr(c.lambda)}, {"dim", number(d)}});
    }
    mpz_class df = doubleFactorial(2L * o.n - 1);
    if (o.json) {
        out << json{{"n", o.n}, {"cells", cells}, {"sum_dim_squared", number(sum)}, {"double_factorial", number(df)}}.dump()
            << "\n";
    } else {
        for (auto& c : cells)
            out << "f=" << c["f"] << " lambda=(" << c["lambda"].get<std::string>() << ") dim=" << c["dim"] << "\n";
        out << "cells=" << cells.size() << " sum dim^2=" << sum.get_str() << " (2n-1)!!=" << df.get_str() << "\n";
    }
    return sum == df ? kOk : kMismatch;
}

int cmdGram(const Opts& o, std::ostream& out) {
    CellLabel c = cellFrom(o);
    Session s(o);
    FactoredValue v = s.det(o.n, c);
    s.flush();
    printDet(out, o, o.n, c, v);
    return kOk;
}

int cmdGramAll(const Opts& o, std::ostream& out) {
    if (o.n < 0) throw UsageError("--n is required");
    auto cells = cellLabels(o.n);
    std::vector<FactoredValue> vals(cells.size());
    Session s(o);
    parallelFor(cells.size(), o.jobs, [&](size_t i) { vals[i] = s.det(o.n, cells[i]); });
    s.flush();
    for (size_t i = 0; i < cells.size(); ++i) printDet(out, o, o.n, cells[i], vals[i]);
    return kOk;
}

// "+q^A", "-q^A", "q^A", "q", "-q"
std::optional<std::pair<int, int>> parseQPower(std::string s) {
    int eps = 1;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        eps = s[0] == '-' ? -1 : 1;
        s = s.substr(1);
    }
    if (s == "q") return std::make_pair(eps, 1);
    if (s.rfind("q^", 0) != 0) return std::nullopt;
    size_t used = 0;
    int a = std::stoi(s.substr(2), &used);
    if (used != s.size() - 2) return std::nullopt;
    return std::make_pair(eps, a);
}

mpq_class parseRational(const std::string& s, const char* what) {
    try {
        mpq_class x(s);
        x.canonicalize();
        return x;
    } catch (const std::exception&) {
        throw UsageError(std::string("bad rational for ") + what + ": " + s);
    }
}

int cmdEval(const Opts& o, std::ostream& out) {
    CellLabel c = cellFrom(o);
    if (o.r.empty()) throw UsageError("--r is required");
    auto qp = parseQPower(o.r);
    Session s(o);
    FactoredValue v = s.det(o.n, c);
    s.flush();
    json j{{"n", o.n}, {"f", c.f}, {"lambda", partitionStr(c.lambda)}};
    std::string text;
    if (o.q.empty()) {
        if (!qp) throw UsageError("numeric --r needs --q");
        RationalFn u = v.substituteR(qp->first, qp->second);
        text = o.factored ? factorize(u).render() : u.str();
        j["r"] = o.r;
        j["value"] = text;
    } else {
        Field F{o.characteristic};
        mpq_class q0 = parseRational(o.q, "--q");
        mpq_class r0 = qp ? mpq_class(qp->first * fieldPow(q0, qp->second, F)) : parseRational(o.r, "--r");
        mpq_class x = evalNumeric(v, q0, r0, F);
        text = x.get_str();
        j["q"] = o.q;
        j["r"] = o.r;
        j["char"] = o.characteristic;
        j["value"] = text;
    }
    if (o.json)
        out << j.dump() << "\n";
    else
        out << detTitle(o.n, c) << " at " << (o.q.empty() ? "" : "q=" + o.q + ", ") << "r=" << o.r << ": " << text << "\n";
    return kOk;
}

FieldSpec fieldFrom(const Opts& o) {
    FieldSpec spec;
    spec.characteristic = o.characteristic;
    if (o.qorder != "inf") {
        try {
            size_t used = 0;
            spec.qOrder = std::stol(o.qorder, &used);
            if (used != o.qorder.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError("--qorder must be an integer or inf");
        }
    }
    std::string r = o.r.empty() ? "generic" : o.r;
    if (r == "generic") {
        spec.r = RSpec::generic();
    } else if (r.rfind("numeric:", 0) == 0) {
        std::string rest = r.substr(8);
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw UsageError("--r numeric:Q0,R0");
        spec.r = RSpec::numeric(parseRational(rest.substr(0, comma), "q0"), parseRational(rest.substr(comma + 1), "r0"));
    } else {
        std::optional<std::pair<int, int>> qp;
        try {
            qp = parseQPower(r);
        } catch (const std::exception&) {
        }
        if (!qp) throw UsageError("--r must be generic, +q^A, -q^A or numeric:Q0,R0");
        spec.r = RSpec::powerOfQ(qp->first, qp->second);
    }
    try {
        validate(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return spec;
}

int cmdSemisimple(const Opts& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("--n must be a positive integer");
    FieldSpec spec = fieldFrom(o);
    Verdict v = decideSemisimple(o.n, spec);
    json j{{"n", o.n},
           {"semisimple", v.semisimple},
           {"clause", v.clause},
           {"reasons", v.reasons},
           {"witness", v.witness.empty() ? json(nullptr) : json(v.witness)}};
    out << j.dump() << "\n";
    return kOk;
}

int cmdCertify(const Opts& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("--n must be a positive integer");
    std::vector<CellLabel> cells;
    if (o.f >= 0 || o.lambdaGiven)
        cells.push_back(cellFrom(o));
    else
        cells = cellLabels(o.n);
    std::vector<CertReport> reports(cells.size());
    parallelFor(cells.size(), o.jobs, [&](size_t i) { reports[i] = certifyCell(o.n, cells[i].f, cells[i].lambda); });
    bool pass = true;
    json arr = json::array();
    for (auto& r : reports) {
        pass = pass && r.allPass();
        arr.push_back(r.toJson());
    }
    out << json{{"n", o.n}, {"pass", pass}, {"cells", arr}}.dump(o.json ? -1 : 2) << "\n";
    return pass ? kOk : kMismatch;
}

int cmdTable(const Opts& o, std::ostream& out) {
    if (o.maxN < 2) throw UsageError("--max-n must be at least 2");
    Session s(o);
    auto rminusSet = [](const FactoredValue& v, bool dual) {
        std::set<std::pair<int, int>> out;
        for (auto& [a, e] : v.factors())
            if (a.kind == AtomKind::RMinus) out.insert(dual ? std::make_pair(-a.eps, -a.a) : std::make_pair(a.eps, a.a));
        return out;
    };
    bool all = true;
    json rows = json::array();
    for (int n = 2; n <= o.maxN; ++n) {
        Partition row, col(n - 2, 1);
        if (n > 2) row = {n - 2};
        FactoredValue closed = closedFormLine(n);
        FactoredValue dl = s.det(n, {1, row}), dc = s.det(n, {1, col});
        bool lineOk = dl == closed;
        bool dualOk = rminusSet(dc, false) == rminusSet(closed, true);
        all = all && lineOk && dualOk;
        rows.push_back({{"n", n},
                        {"line_matches_closed_form", lineOk},
                        {"column_matches_dual_pattern", dualOk},
                        {"closed_form", closed.render()},
                        {"column", dc.render()}});
    }
    s.flush();
    if (o.json) {
        out << json{{"rows", rows}, {"pass", all}}.dump() << "\n";
    } else {
        out << "n  (1,(n-2)) vs closed form  (1,(1^(n-2))) vs dual pattern\n";
        for (auto& r : rows)
            out << r["n"].get<int>() << "  " << (r["line_matches_closed_form"].get<bool>() ? "match" : "MISMATCH")
                << "  " << (r["column_matches_dual_pattern"].get<bool>() ? "match" : "MISMATCH") << "\n";
    }
    return all ? kOk : kMismatch;
}

}  // namespace

int runCommand(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gram determinants, seminormal certification and semisimplicity for BMW algebras", "bmw"};
    app.require_subcommand(1);
    Opts o;

    auto addN = [&](CLI::App* s) { s->add_option("--n", o.n, "rank n")->required()->check(CLI::NonNegativeNumber); };
    auto addCell = [&](CLI::App* s) {
        s->add_option("--f", o.f, "number of arcs")->check(CLI::NonNegativeNumber);
        s->add_option("--lambda", o.lambda, "partition, e.g. \"2,1\"; \"\" for the empty one")
            ->each([&](const std::string&) { o.lambdaGiven = true; });
    };
    auto addCache = [&](CLI::App* s) {
        s->add_flag("--no-cache", o.noCache, "do not read or write the cache");
        s->add_flag("--verify-cache", o.verifyCache, "recompute and compare with cached values");
    };
    auto addJobs = [&](CLI::App* s) { s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber); };
    auto addJson = [&](CLI::App* s) { s->add_flag("--json", o.json, "machine-readable output"); };

    auto* dims = app.add_subcommand("dims", "cell labels of Lambda_n and their dimensions");
    addN(dims);
    addJson(dims);

    auto* gram = app.add_subcommand("gram", "Gram determinant of one cell module");
    addN(gram);
    addCell(gram);
    addJson(gram);
    gram->add_flag("--factored", o.factored, "print in factored form");
    addCache(gram);

    auto* gramAll = app.add_subcommand("gram-all", "Gram determinants of every cell of Lambda_n");
    addN(gramAll);
    addJson(gramAll);
    gramAll->add_flag("--factored", o.factored, "print in factored form");
    addJobs(gramAll);
    addCache(gramAll);

    auto* eval = app.add_subcommand("eval", "specialise a Gram determinant");
    addN(eval);
    addCell(eval);
    addJson(eval);
    eval->add_flag("--factored", o.factored, "factor the specialised value");
    eval->add_option("--q", o.q, "numeric q (rational)");
    eval->add_option("--r", o.r, "numeric r, or +q^A / -q^A")->required();
    eval->add_option("--char", o.characteristic, "0 or a prime");
    addCache(eval);

    auto* semis = app.add_subcommand("semisimple", "decide semisimplicity of B_n over a field");
    semis->add_option("--n", o.n, "rank n")->required();
    semis->add_option("--char", o.characteristic, "0 or a prime");
    semis->add_option("--qorder", o.qorder, "o(q^2): integer or inf");
    semis->add_option("--r", o.r, "generic, +q^A, -q^A or numeric:Q0,R0");
    addJson(semis);

    auto* cert = app.add_subcommand("certify", "build seminormal representations and check the relations");
    addN(cert);
    addCell(cert);
    addJobs(cert);
    addJson(cert);

    auto* table = app.add_subcommand("table", "closed form against the recursion for the one-row and one-column cells");
    table->add_option("--max-n", o.maxN, "largest n")->check(CLI::PositiveNumber);
    addJson(table);
    addCache(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*dims) return cmdDims(o, out);
        if (*gram) return cmdGram(o, out);
        if (*gramAll) return cmdGramAll(o, out);
        if (*eval) return cmdEval(o, out);
        if (*semis) return cmdSemisimple(o, out);
        if (*cert) return cmdCertify(o, out);
        if (*table) return cmdTable(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const Mismatch& e) {
        err << "verification mismatch: " << e.what() << "\n";
        return kMismatch;
    } catch (const std::exception& e) {
        err << "computation error: " << e.what() << "\n";
        return kComputation;
    }
    return kUsage;
}

}  // namespace bmw

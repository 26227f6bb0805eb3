#include "bmw/factored.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bmw {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }
u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::vector<int> primeFactors(int n) {
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

int eulerPhi(int n) {
    int r = n;
    for (int p : primeFactors(n)) r = r / p * (p - 1);
    return r;
}

struct RootOfUnity {
    u64 p = 0;
    u64 zeta = 0;
};

std::mutex g_cycMutex;
std::unordered_map<int, LaurentPoly> g_cyc;
std::unordered_map<int, RootOfUnity> g_roots;

// prime p = 1 mod m and an element of exact order m
RootOfUnity rootOfUnity(int m) {
    {
        std::lock_guard<std::mutex> lk(g_cycMutex);
        auto it = g_roots.find(m);
        if (it != g_roots.end()) return it->second;
    }
    RootOfUnity ru;
    u64 k = (1ULL << 40) / (u64)m + 1;
    for (;; ++k) {
        u64 p = k * (u64)m + 1;
        mpz_class pz;
        mpz_import(pz.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
        if (!mpz_probab_prime_p(pz.get_mpz_t(), 30)) continue;
        auto pf = primeFactors(m);
        for (u64 g = 2; g < 1000; ++g) {
            u64 z = powmod(g, (p - 1) / m, p);
            bool ok = (z != 1 || m == 1);
            for (int l : pf)
                if (powmod(z, m / l, p) == 1) ok = false;
            if (ok) {
                ru = {p, z};
                break;
            }
        }
        if (ru.p) break;
    }
    std::lock_guard<std::mutex> lk(g_cycMutex);
    g_roots[m] = ru;
    return ru;
}

u64 evalAt(const LaurentPoly& c, u64 z, u64 p) {
    u64 s = 0;
    for (auto& t : c.terms()) {
        u64 cm = mpz_fdiv_ui(t.c.get_mpz_t(), p);
        int e = t.eq;
        u64 zz = e >= 0 ? powmod(z, e, p) : powmod(powmod(z, p - 2, p), -e, p);
        s = (s + mulmod(cm, zz, p)) % p;
    }
    return s;
}

LaurentPoly derivR(const LaurentPoly& p) {
    std::vector<Term> v;
    for (auto& t : p.terms())
        if (t.er != 0) v.push_back(Term{t.eq, t.er - 1, t.c * t.er});
    return LaurentPoly::fromTerms(std::move(v));
}

LaurentPoly derivQ(const LaurentPoly& p) {
    std::vector<Term> v;
    for (auto& t : p.terms())
        if (t.eq != 0) v.push_back(Term{t.eq - 1, t.er, t.c * t.eq});
    return LaurentPoly::fromTerms(std::move(v));
}

bool isUnitPoly(const LaurentPoly& p) { return p.isMonomial(); }

// squarefree decomposition of a primitive polynomial (min exponents 0) w.r.t. r or q
std::vector<std::pair<LaurentPoly, int>> yun(const LaurentPoly& f, bool inR) {
    std::vector<std::pair<LaurentPoly, int>> out;
    auto D = [&](const LaurentPoly& x) { return inR ? derivR(x) : derivQ(x); };
    LaurentPoly fp = D(f);
    if (fp.isZero()) {
        if (!isUnitPoly(f)) out.push_back({primitiveNormal(f), 1});
        return out;
    }
    LaurentPoly a = polyGcd(f, fp);
    LaurentPoly b = exactDiv(f, a);
    LaurentPoly c = exactDiv(fp, a);
    LaurentPoly d = c - D(b);
    int i = 1;
    while (!isUnitPoly(b)) {
        LaurentPoly ai = polyGcd(b, d);
        b = exactDiv(b, ai);
        c = exactDiv(d, ai);
        d = c - D(b);
        if (!isUnitPoly(ai)) out.push_back({primitiveNormal(ai), i});
        ++i;
    }
    return out;
}

int cycloIndex(const LaurentPoly& p) {
    if (p.dependsOnR() || p.minQ() != 0) return 0;
    int deg = p.maxQ();
    for (int m = 1; m <= 6 * deg + 6; ++m) {
        if (eulerPhi(m) != deg) continue;
        if (cyclotomicPoly(m) == p) return m;
    }
    return 0;
}

}  // namespace

int moebius(int n) {
    int r = 1;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            r = -r;
        }
    if (n > 1) r = -r;
    return r;
}

const LaurentPoly& cyclotomicPoly(int m) {
    {
        std::lock_guard<std::mutex> lk(g_cycMutex);
        auto it = g_cyc.find(m);
        if (it != g_cyc.end()) return it->second;
    }
    LaurentPoly v = LaurentPoly::q(m) - LaurentPoly(1);
    for (int d = 1; d < m; ++d)
        if (m % d == 0) v = exactDiv(v, cyclotomicPoly(d));
    std::lock_guard<std::mutex> lk(g_cycMutex);
    return g_cyc.emplace(m, v).first->second;
}

// ---------------------------------------------------------------------------

LaurentPoly Atom::expand() const {
    switch (kind) {
        case AtomKind::RMinus:
            return LaurentPoly::r() - LaurentPoly::monomial(eps, a, 0);
        case AtomKind::QuantumInt:
            return quantumInt(k);
        case AtomKind::QSquareMinusOne:
            return LaurentPoly::q(2) - LaurentPoly(1);
        case AtomKind::Generic:
            return poly;
    }
    return poly;
}

std::string Atom::str() const {
    switch (kind) {
        case AtomKind::RMinus: {
            std::string s = eps > 0 ? "r-" : "r+";
            if (a == 0) return s + "1";
            if (a == 1) return s + "q";
            return s + "q^" + std::to_string(a);
        }
        case AtomKind::QuantumInt:
            return "[" + std::to_string(k) + "]";
        case AtomKind::QSquareMinusOne:
            return "q^2-1";
        case AtomKind::Generic: {
            std::string s = poly.str(), o;
            for (char ch : s)
                if (ch != ' ') o += ch;
            return o;
        }
    }
    return "";
}

bool Atom::operator<(const Atom& o) const {
    if (kind != o.kind) return (int)kind < (int)o.kind;
    switch (kind) {
        case AtomKind::RMinus:
            if (a != o.a) return a < o.a;
            return eps > o.eps;
        case AtomKind::QuantumInt:
            return k < o.k;
        case AtomKind::QSquareMinusOne:
            return false;
        case AtomKind::Generic:
            if (cyclo != o.cyclo) return cyclo < o.cyclo;
            return poly < o.poly;
    }
    return false;
}

bool Atom::operator==(const Atom& o) const { return !(*this < o) && !(o < *this); }

// ---------------------------------------------------------------------------

FactoredValue FactoredValue::zero() {
    FactoredValue v;
    v.unit_.coeff = 0;
    return v;
}

FactoredValue FactoredValue::fromUnit(const mpq_class& c, int eq, int er) {
    FactoredValue v;
    v.unit_ = Unit{c, eq, er};
    if (c == 0) v.unit_ = Unit{0, 0, 0};
    return v;
}

FactoredValue FactoredValue::fromAtom(const Atom& a, int e) {
    FactoredValue v;
    v.mulAtom(a, e);
    v.canonicalizeGenerics();
    return v;
}

int FactoredValue::exponentOf(const Atom& a) const {
    auto it = f_.find(a);
    return it == f_.end() ? 0 : it->second;
}

void FactoredValue::mulAtom(const Atom& a, long e) {
    if (e == 0) return;
    auto it = f_.find(a);
    if (it == f_.end()) {
        f_.emplace(a, (int)e);
    } else {
        it->second += (int)e;
        if (it->second == 0) f_.erase(it);
    }
}

FactoredValue& FactoredValue::operator*=(const FactoredValue& o) {
    if (isZero() || o.isZero()) return *this = zero();
    unit_.coeff *= o.unit_.coeff;
    unit_.eq += o.unit_.eq;
    unit_.er += o.unit_.er;
    bool touchGeneric = false;
    for (auto& [a, e] : o.f_) {
        mulAtom(a, e);
        if (a.kind != AtomKind::RMinus) touchGeneric = true;
    }
    if (touchGeneric) canonicalizeGenerics();
    return *this;
}

FactoredValue FactoredValue::inverse() const {
    if (isZero()) throw std::domain_error("division by zero");
    FactoredValue v;
    v.unit_ = Unit{1 / unit_.coeff, -unit_.eq, -unit_.er};
    for (auto& [a, e] : f_) v.f_.emplace(a, -e);
    return v;
}

FactoredValue FactoredValue::pow(long e) const {
    if (e == 0) return FactoredValue();
    if (isZero()) {
        if (e < 0) throw std::domain_error("division by zero");
        return zero();
    }
    FactoredValue v;
    mpq_class c = 1, b = unit_.coeff;
    long k = e < 0 ? -e : e;
    for (long i = 0; i < k; ++i) c *= b;
    if (e < 0) c = 1 / c;
    v.unit_ = Unit{c, (int)(unit_.eq * e), (int)(unit_.er * e)};
    for (auto& [a, x] : f_) v.f_.emplace(a, (int)(x * e));
    return v;
}

// Cyclotomic content is re-expressed canonically: Phi_d(q^2) pieces become
// [k] atoms (Moebius inversion) and (q^2-1); unpaired Phi_m(q) stay as Generic.
// Other Generic atoms are refined to a coprime base and grouped by exponent.
void FactoredValue::canonicalizeGenerics() {
    std::map<int, long> x;  // exponent of Phi_m(q)
    std::vector<std::pair<LaurentPoly, long>> gens;
    for (auto it = f_.begin(); it != f_.end();) {
        const Atom& a = it->first;
        long e = it->second;
        if (a.kind == AtomKind::QuantumInt) {
            for (int d = 2; d <= a.k; ++d) {
                if (a.k % d) continue;
                if (d % 2 == 0) {
                    x[2 * d] += e;
                } else {
                    x[d] += e;
                    x[2 * d] += e;
                }
            }
        } else if (a.kind == AtomKind::QSquareMinusOne) {
            x[1] += e;
            x[2] += e;
        } else if (a.kind == AtomKind::Generic && a.cyclo > 0) {
            x[a.cyclo] += e;
        } else if (a.kind == AtomKind::Generic) {
            gens.push_back({a.poly, e});
        } else {
            ++it;
            continue;
        }
        it = f_.erase(it);
    }

    auto take = [&](int m) {
        auto it = x.find(m);
        return it == x.end() ? 0L : it->second;
    };
    auto pairOf = [](long u, long v) -> long {
        if (u > 0 && v > 0) return std::min(u, v);
        if (u < 0 && v < 0) return std::max(u, v);
        return 0;
    };
    std::map<int, long> y;  // exponent of Phi_d(q^2), d >= 1
    int maxm = x.empty() ? 0 : x.rbegin()->first;
    for (int d = 1; 2 * d <= maxm; ++d) {
        long v;
        if (d % 2 == 0) {
            v = take(2 * d);
            x[2 * d] -= v;
        } else {
            v = pairOf(take(d), take(2 * d));
            x[d] -= v;
            x[2 * d] -= v;
        }
        if (v) y[d] = v;
    }
    if (y.count(1)) mulAtom(Atom::q2m1(), y[1]);
    int maxd = y.empty() ? 0 : y.rbegin()->first;
    for (int k = 2; k <= maxd; ++k) {
        long z = 0;
        for (auto& [d, v] : y)
            if (d >= k && d % k == 0) z += v * moebius(d / k);
        if (z) mulAtom(Atom::qint(k), z);
    }
    for (auto& [m, v] : x)
        if (v) mulAtom(Atom::generic(cyclotomicPoly(m), m), v);

    if (gens.empty()) return;
    if (gens.size() > 1) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < gens.size() && !changed; ++i)
                for (size_t j = i + 1; j < gens.size() && !changed; ++j) {
                    LaurentPoly g = polyGcd(gens[i].first, gens[j].first);
                    if (g.isMonomial()) continue;
                    long e = gens[i].second + gens[j].second;
                    gens[i].first = exactDiv(gens[i].first, g);
                    gens[j].first = exactDiv(gens[j].first, g);
                    gens.push_back({g, e});
                    changed = true;
                }
            gens.erase(std::remove_if(gens.begin(), gens.end(),
                                      [](auto& p) { return p.first.isMonomial() || p.second == 0; }),
                       gens.end());
        }
    }
    std::map<long, LaurentPoly> grp;
    for (auto& [p, e] : gens) {
        if (e == 0) continue;
        auto it = grp.find(e);
        if (it == grp.end())
            grp.emplace(e, p);
        else
            it->second = it->second * p;
    }
    for (auto& [e, p] : grp) {
        mulAtom(Atom::generic(primitiveNormal(p)), e);
    }
}

RationalFn FactoredValue::expand() const {
    if (isZero()) return RationalFn();
    LaurentPoly num = LaurentPoly::monomial(unit_.coeff.get_num(), 0, 0);
    LaurentPoly den = LaurentPoly::monomial(unit_.coeff.get_den(), 0, 0);
    if (unit_.eq >= 0)
        num = num.shift(unit_.eq, 0);
    else
        den = den.shift(-unit_.eq, 0);
    if (unit_.er >= 0)
        num = num.shift(0, unit_.er);
    else
        den = den.shift(0, -unit_.er);
    for (auto& [a, e] : f_) {
        LaurentPoly p = a.expand().pow(e > 0 ? e : -e);
        if (e > 0)
            num = num * p;
        else
            den = den * p;
    }
    return RationalFn(num, den);
}

RationalFn FactoredValue::substituteR(int eps, int a) const {
    if (isZero()) return RationalFn();
    LaurentPoly num = LaurentPoly::monomial(unit_.coeff.get_num(), 0, 0);
    LaurentPoly den = LaurentPoly::monomial(unit_.coeff.get_den(), 0, 0);
    int eq = unit_.eq + a * unit_.er;
    if (eps < 0 && (unit_.er % 2 != 0)) num = -num;
    if (eq >= 0)
        num = num.shift(eq, 0);
    else
        den = den.shift(-eq, 0);
    bool zero = false;
    for (auto& [at, e] : f_) {
        LaurentPoly p = at.expand().substituteR(eps, a);
        if (p.isZero()) {
            if (e < 0) throw std::domain_error("specialization pole");
            zero = true;
            continue;
        }
        p = p.pow(e > 0 ? e : -e);
        if (e > 0)
            num = num * p;
        else
            den = den * p;
    }
    if (zero) return RationalFn();
    return RationalFn(num, den);
}

std::string renderUnit(const Unit& u) {
    std::string m = monomialStr(u.eq, u.er);
    std::string c = u.coeff.get_str();
    if (m.empty()) return c;
    if (u.coeff == 1) return m;
    if (u.coeff == -1) return "-" + m;
    return c + "*" + m;
}

std::string FactoredValue::render() const {
    if (isZero()) return "0";
    std::vector<std::string> parts;
    bool trivialUnit = unit_.coeff == 1 && unit_.eq == 0 && unit_.er == 0;
    if (!trivialUnit || f_.empty()) parts.push_back(renderUnit(unit_));
    for (auto& [a, e] : f_) {
        std::string s = a.kind == AtomKind::QuantumInt ? a.str() : "(" + a.str() + ")";
        if (e != 1) s += "^" + std::to_string(e);
        parts.push_back(s);
    }
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " * ";
        out += parts[i];
    }
    return out;
}

nlohmann::json FactoredValue::toJson() const {
    nlohmann::json fs = nlohmann::json::array();
    for (auto& [a, e] : f_) {
        nlohmann::json j = {{"atom", a.str()}, {"exp", e}};
        if (a.kind == AtomKind::Generic) j["poly"] = polyToJson(a.poly);
        fs.push_back(j);
    }
    return {{"unit", {{"coeff", unit_.coeff.get_str()}, {"e_q", unit_.eq}, {"e_r", unit_.er}}},
            {"factors", fs}};
}

FactoredValue FactoredValue::fromJson(const nlohmann::json& j) {
    const auto& u = j.at("unit");
    FactoredValue v = fromUnit(mpq_class(u.at("coeff").get<std::string>()), u.at("e_q").get<int>(),
                               u.at("e_r").get<int>());
    if (v.isZero()) return v;
    for (auto& f : j.at("factors")) {
        std::string s = f.at("atom").get<std::string>();
        int e = f.at("exp").get<int>();
        Atom a;
        if (f.contains("poly")) {
            LaurentPoly p = polyFromJson(f.at("poly"));
            a = Atom::generic(p, cycloIndex(p));
        } else if (s == "q^2-1") {
            a = Atom::q2m1();
        } else if (s.size() > 2 && s.front() == '[') {
            a = Atom::qint(std::stoi(s.substr(1, s.size() - 2)));
        } else if (s.size() >= 3 && s[0] == 'r' && (s[1] == '-' || s[1] == '+')) {
            int eps = s[1] == '-' ? 1 : -1;
            std::string rest = s.substr(2);
            int ex;
            if (rest == "1")
                ex = 0;
            else if (rest == "q")
                ex = 1;
            else if (rest.rfind("q^", 0) == 0)
                ex = std::stoi(rest.substr(2));
            else
                throw std::invalid_argument("bad atom: " + s);
            a = Atom::rminus(eps, ex);
        } else {
            throw std::invalid_argument("bad atom: " + s);
        }
        v.mulAtom(a, e);
    }
    v.canonicalizeGenerics();
    return v;
}

// ---------------------------------------------------------------------------

FactoredValue factorizePoly(const LaurentPoly& p0) {
    if (p0.isZero()) return FactoredValue::zero();
    mpz_class c;
    int eq, er;
    LaurentPoly P = primitiveNormal(p0, &c, &eq, &er);
    FactoredValue out = FactoredValue::fromUnit(mpq_class(c), eq, er);

    if (P.dependsOnR()) {
        int span = P.maxQ() - P.minQ();
        for (int a = -span; a <= span; ++a)
            for (int eps : {1, -1}) {
                int cnt = 0;
                while (P.dependsOnR() && P.substituteR(eps, a).isZero()) {
                    P = exactDiv(P, LaurentPoly::r() - LaurentPoly::monomial(eps, a, 0));
                    ++cnt;
                }
                if (cnt) out *= FactoredValue::fromAtom(Atom::rminus(eps, a), cnt);
            }
        P = primitiveNormal(P, &c, &eq, &er);
        out *= FactoredValue::fromUnit(mpq_class(c), eq, er);
    }

    // split off the part depending on q only
    LaurentPoly C = P, Pp(1);
    if (P.dependsOnR()) {
        std::map<int, std::vector<Term>> slices;
        for (auto& t : P.terms()) slices[t.er].push_back(Term{t.eq, 0, t.c});
        LaurentPoly g;
        for (auto& [e, ts] : slices) {
            LaurentPoly s = LaurentPoly::fromTerms(ts);
            g = g.isZero() ? primitiveNormal(s) : polyGcd(g, s);
            if (g.isMonomial()) break;
        }
        C = g;
        Pp = exactDiv(P, C);
        for (auto& [f, m] : yun(Pp, true)) out *= FactoredValue::fromAtom(Atom::generic(f), m);
    }

    if (!C.isMonomial()) {
        C = primitiveNormal(C);
        int deg = C.maxQ();
        for (int m = 1; m <= 6 * deg + 6 && !C.isMonomial(); ++m) {
            int ph = eulerPhi(m);
            if (ph > C.maxQ()) continue;
            RootOfUnity ru = rootOfUnity(m);
            int cnt = 0;
            while (!C.isMonomial() && evalAt(C, ru.zeta, ru.p) == 0) {
                const LaurentPoly& cp = cyclotomicPoly(m);
                if (!divides(cp, C)) break;
                C = exactDiv(C, cp);
                ++cnt;
            }
            if (cnt) out *= FactoredValue::fromAtom(Atom::generic(cyclotomicPoly(m), m), cnt);
        }
        if (!C.isMonomial())
            for (auto& [f, m] : yun(primitiveNormal(C), false))
                out *= FactoredValue::fromAtom(Atom::generic(f), m);
    }
    // sign / monomial bookkeeping: compare leading data with the input
    RationalFn back = out.expand();
    RationalFn want(p0);
    if (back != want) {
        RationalFn ratio = want / back;
        if (!ratio.isPolynomial() || !ratio.num().isMonomial())
            throw std::logic_error("factorize: reconstruction mismatch");
        const Term& t = ratio.num().lead();
        out *= FactoredValue::fromUnit(mpq_class(t.c), t.eq, t.er);
    }
    return out;
}

FactoredValue factorize(const RationalFn& v) {
    if (v.isZero()) return FactoredValue::zero();
    return factorizePoly(v.num()) / factorizePoly(v.den());
}

}  // namespace bmw

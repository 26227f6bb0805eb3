#include "bmw/laurent.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace bmw {

namespace {

bool before(const Term& a, const Term& b) {
    if (a.er != b.er) return a.er > b.er;
    return a.eq > b.eq;
}

void sortMerge(std::vector<Term>& v) {
    std::sort(v.begin(), v.end(), before);
    size_t w = 0;
    for (size_t i = 0; i < v.size();) {
        size_t j = i + 1;
        mpz_class s = v[i].c;
        while (j < v.size() && v[j].eq == v[i].eq && v[j].er == v[i].er) s += v[j++].c;
        if (s != 0) {
            v[w].eq = v[i].eq;
            v[w].er = v[i].er;
            v[w].c = s;
            ++w;
        }
        i = j;
    }
    v.resize(w);
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) t_.push_back(Term{0, 0, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
    if (c != 0) t_.push_back(Term{0, 0, c});
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int eq, int er) {
    LaurentPoly p;
    if (c != 0) p.t_.push_back(Term{eq, er, c});
    return p;
}

LaurentPoly LaurentPoly::fromTerms(std::vector<Term> ts) {
    LaurentPoly p;
    sortMerge(ts);
    p.t_ = std::move(ts);
    return p;
}

bool LaurentPoly::isOne() const {
    return t_.size() == 1 && t_[0].eq == 0 && t_[0].er == 0 && t_[0].c == 1;
}

int LaurentPoly::minQ() const {
    int m = INT_MAX;
    for (auto& x : t_) m = std::min(m, x.eq);
    return t_.empty() ? 0 : m;
}
int LaurentPoly::maxQ() const {
    int m = INT_MIN;
    for (auto& x : t_) m = std::max(m, x.eq);
    return t_.empty() ? 0 : m;
}
int LaurentPoly::minR() const { return t_.empty() ? 0 : t_.back().er; }
int LaurentPoly::maxR() const { return t_.empty() ? 0 : t_.front().er; }

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (auto& x : t_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::shift(int dq, int dr) const {
    LaurentPoly p = *this;
    for (auto& x : p.t_) {
        x.eq += dq;
        x.er += dr;
    }
    return p;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
    if (c == 0) return {};
    LaurentPoly p = *this;
    for (auto& x : p.t_) x.c *= c;
    return p;
}

LaurentPoly LaurentPoly::divInt(const mpz_class& c) const {
    LaurentPoly p = *this;
    for (auto& x : p.t_) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), c.get_mpz_t());
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& x : p.t_) x.c = -x.c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.t_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && before(t_[i], o.t_[j]))) {
            out.push_back(std::move(t_[i++]));
        } else if (i == t_.size() || before(o.t_[j], t_[i])) {
            out.push_back(o.t_[j++]);
        } else {
            mpz_class s = t_[i].c + o.t_[j].c;
            if (s != 0) out.push_back(Term{t_[i].eq, t_[i].er, s});
            ++i;
            ++j;
        }
    }
    t_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.isZero() || b.isZero()) return {};
    if (b.isOne()) return a;
    if (a.isOne()) return b;
    std::vector<Term> v;
    v.reserve(a.size() * b.size());
    for (auto& x : a.terms())
        for (auto& y : b.terms()) v.push_back(Term{x.eq + y.eq, x.er + y.er, x.c * y.c});
    return LaurentPoly::fromTerms(std::move(v));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].eq != o.t_[i].eq || t_[i].er != o.t_[i].er || t_[i].c != o.t_[i].c) return false;
    return true;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (t_.size() != o.t_.size()) return t_.size() < o.t_.size();
    for (size_t i = 0; i < t_.size(); ++i) {
        if (t_[i].er != o.t_[i].er) return t_[i].er < o.t_[i].er;
        if (t_[i].eq != o.t_[i].eq) return t_[i].eq < o.t_[i].eq;
        if (t_[i].c != o.t_[i].c) return t_[i].c < o.t_[i].c;
    }
    return false;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly res(1), b = *this;
    while (k) {
        if (k & 1) res = res * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return res;
}

LaurentPoly LaurentPoly::substituteR(int eps, int a) const {
    std::vector<Term> v;
    v.reserve(t_.size());
    for (auto& x : t_) {
        mpz_class c = x.c;
        if (eps < 0 && (x.er % 2 != 0)) c = -c;
        v.push_back(Term{x.eq + a * x.er, 0, c});
    }
    return fromTerms(std::move(v));
}

LaurentPoly LaurentPoly::substituteQ(int s, int a) const {
    std::vector<Term> v;
    v.reserve(t_.size());
    for (auto& x : t_) {
        mpz_class c = x.c;
        if (s < 0 && (x.eq % 2 != 0)) c = -c;
        v.push_back(Term{a * x.eq, x.er, c});
    }
    return fromTerms(std::move(v));
}

std::string monomialStr(int eq, int er) {
    std::string s;
    auto pw = [](const char* v, int e) {
        std::string o = v;
        if (e != 1) o += "^" + std::to_string(e);
        return o;
    };
    if (er != 0) s += pw("r", er);
    if (eq != 0) {
        if (!s.empty()) s += "*";
        s += pw("q", eq);
    }
    return s;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& x : t_) {
        mpz_class a = abs(x.c);
        bool neg = x.c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string m = monomialStr(x.eq, x.er);
        if (m.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << m;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// dense helpers for gcd / division.  UPoly[i] = coeff of q^i, BPoly[j] = coeff of r^j

namespace {

using UPoly = std::vector<mpz_class>;
using BPoly = std::vector<UPoly>;

void trimU(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
void trimB(BPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}
int degU(const UPoly& a) { return (int)a.size() - 1; }

mpz_class contU(const UPoly& a) {
    mpz_class g = 0;
    for (auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UPoly ppU(UPoly a) {
    mpz_class g = contU(a);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

UPoly mulU(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trimU(c);
    return c;
}

void subMulU(UPoly& a, const UPoly& b, const mpz_class& s, int sh) {
    // a -= s * q^sh * b
    if (a.size() < b.size() + sh) a.resize(b.size() + sh);
    for (size_t j = 0; j < b.size(); ++j) a[j + sh] -= s * b[j];
    trimU(a);
}

// pseudo remainder of a by b
UPoly premU(UPoly a, const UPoly& b) {
    int db = degU(b);
    const mpz_class& lb = b.back();
    while (!a.empty() && degU(a) >= db) {
        mpz_class la = a.back();
        int sh = degU(a) - db;
        for (auto& x : a) x *= lb;
        subMulU(a, b, la, sh);
    }
    return a;
}

UPoly gcdU(UPoly a, UPoly b) {
    trimU(a);
    trimU(b);
    if (a.empty()) return ppU(b);
    if (b.empty()) return ppU(a);
    mpz_class ca = contU(a), cb = contU(b), g;
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = ppU(a);
    b = ppU(b);
    if (degU(a) < degU(b)) std::swap(a, b);
    while (!b.empty()) {
        if (degU(b) == 0) {
            a = UPoly{1};
            break;
        }
        UPoly r = premU(a, b);
        a = std::move(b);
        b = r.empty() ? r : ppU(std::move(r));
    }
    a = ppU(a);
    for (auto& x : a) x *= g;
    return a;
}

// exact division a / b; returns false if not exact
bool divU(UPoly a, const UPoly& b, UPoly& quo) {
    trimU(a);
    quo.clear();
    if (a.empty()) return true;
    int db = degU(b);
    if (degU(a) < db) return false;
    quo.assign(degU(a) - db + 1, 0);
    const mpz_class& lb = b.back();
    while (!a.empty() && degU(a) >= db) {
        if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
        int sh = degU(a) - db;
        quo[sh] = c;
        size_t before = a.size();
        subMulU(a, b, c, sh);
        if (a.size() >= before) return false;
    }
    return a.empty();
}

bool isConstB(const BPoly& a) { return a.size() == 1; }

UPoly contB(const BPoly& a) {
    UPoly g;
    for (auto& c : a) {
        if (c.empty()) continue;
        g = gcdU(g, c);
        if (g.size() == 1) break;
    }
    return g;
}

BPoly divByU(const BPoly& a, const UPoly& c) {
    BPoly out(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j].empty()) continue;
        if (!divU(a[j], c, out[j])) throw std::logic_error("divByU: inexact");
    }
    return out;
}

BPoly ppB(const BPoly& a) {
    UPoly c = contB(a);
    if (c.size() == 1 && c[0] == 1) return a;
    return divByU(a, c);
}

BPoly premB(BPoly a, const BPoly& b) {
    int db = (int)b.size() - 1;
    const UPoly& lb = b.back();
    while (!a.empty() && (int)a.size() - 1 >= db) {
        UPoly la = a.back();
        int sh = (int)a.size() - 1 - db;
        for (auto& x : a) x = mulU(x, lb);
        for (int j = 0; j <= db; ++j) {
            UPoly t = mulU(la, b[j]);
            UPoly& dst = a[j + sh];
            if (dst.size() < t.size()) dst.resize(t.size());
            for (size_t k = 0; k < t.size(); ++k) dst[k] -= t[k];
            trimU(dst);
        }
        trimB(a);
    }
    return a;
}

BPoly gcdB(BPoly a, BPoly b) {
    trimB(a);
    trimB(b);
    UPoly ca = contB(a), cb = contB(b);
    UPoly g = gcdU(ca, cb);
    if (a.empty()) return BPoly{g.empty() ? UPoly{} : g};
    a = divByU(a, ca);
    b = divByU(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (isConstB(b)) {
            a = BPoly{UPoly{1}};
            break;
        }
        BPoly r = premB(a, b);
        a = std::move(b);
        b = r.empty() ? r : ppB(r);
    }
    a = ppB(a);
    for (auto& c : a) c = mulU(c, g);
    trimB(a);
    return a;
}

bool divB(BPoly a, const BPoly& b, BPoly& quo) {
    trimB(a);
    quo.clear();
    if (a.empty()) return true;
    int db = (int)b.size() - 1;
    if ((int)a.size() - 1 < db) return false;
    quo.assign(a.size() - db, UPoly{});
    const UPoly& lb = b.back();
    while (!a.empty() && (int)a.size() - 1 >= db) {
        UPoly c;
        if (!divU(a.back(), lb, c)) return false;
        int sh = (int)a.size() - 1 - db;
        quo[sh] = c;
        for (int j = 0; j <= db; ++j) {
            UPoly t = mulU(c, b[j]);
            UPoly& dst = a[j + sh];
            if (dst.size() < t.size()) dst.resize(t.size());
            for (size_t k = 0; k < t.size(); ++k) dst[k] -= t[k];
            trimU(dst);
        }
        if (!a.back().empty()) return false;
        trimB(a);
    }
    return a.empty();
}

BPoly toDense(const LaurentPoly& p, int mq, int mr) {
    BPoly out;
    if (p.isZero()) return out;
    out.resize(p.maxR() - mr + 1);
    for (auto& t : p.terms()) {
        UPoly& u = out[t.er - mr];
        size_t i = t.eq - mq;
        if (u.size() <= i) u.resize(i + 1);
        u[i] = t.c;
    }
    for (auto& u : out) trimU(u);
    return out;
}

LaurentPoly fromDense(const BPoly& a, int mq, int mr) {
    std::vector<Term> v;
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t i = 0; i < a[j].size(); ++i)
            if (a[j][i] != 0) v.push_back(Term{(int)i + mq, (int)j + mr, a[j][i]});
    return LaurentPoly::fromTerms(std::move(v));
}

}  // namespace

LaurentPoly primitiveNormal(const LaurentPoly& a, mpz_class* coeff, int* eq, int* er) {
    if (a.isZero()) throw std::domain_error("primitiveNormal of zero");
    int mq = a.minQ(), mr = a.minR();
    mpz_class c = a.content();
    if (a.lead().c < 0) c = -c;
    if (coeff) *coeff = c;
    if (eq) *eq = mq;
    if (er) *er = mr;
    return a.shift(-mq, -mr).divInt(c);
}

LaurentPoly polyGcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.isZero() && b.isZero()) throw std::domain_error("gcd undefined");
    if (a.isZero()) return primitiveNormal(b);
    if (b.isZero()) return primitiveNormal(a);
    if (a.isMonomial() || b.isMonomial()) return LaurentPoly(1);
    LaurentPoly pa = primitiveNormal(a), pb = primitiveNormal(b);
    if (pa == pb) return pa;
    BPoly g = gcdB(toDense(pa, 0, 0), toDense(pb, 0, 0));
    return primitiveNormal(fromDense(g, 0, 0));
}

namespace {
bool tryDiv(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& out) {
    if (b.isZero()) throw std::domain_error("division by zero");
    if (a.isZero()) {
        out = LaurentPoly();
        return true;
    }
    if (b.isMonomial()) {
        const Term& t = b.lead();
        std::vector<Term> v;
        for (auto& x : a.terms()) {
            if (!mpz_divisible_p(x.c.get_mpz_t(), t.c.get_mpz_t())) return false;
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), x.c.get_mpz_t(), t.c.get_mpz_t());
            v.push_back(Term{x.eq - t.eq, x.er - t.er, c});
        }
        out = LaurentPoly::fromTerms(std::move(v));
        return true;
    }
    int aq = a.minQ(), ar = a.minR(), bq = b.minQ(), br = b.minR();
    BPoly quo;
    if (!divB(toDense(a, aq, ar), toDense(b, bq, br), quo)) return false;
    out = fromDense(quo, aq - bq, ar - br);
    return true;
}
}  // namespace

LaurentPoly exactDiv(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (!tryDiv(a, b, out)) throw std::domain_error("inexact division");
    return out;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
    LaurentPoly out;
    return tryDiv(a, b, out);
}

}  // namespace bmw

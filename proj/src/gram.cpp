#include "bmw/gram.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace bmw {

namespace {

RationalFn qintR(int m) { return RationalFn(quantumInt(m)); }
RationalFn mono(int eq, int er) { return RationalFn(LaurentPoly::monomial(1, eq, er)); }

std::mutex g_memoMutex;
std::map<std::pair<Partition, Partition>, RationalFn> g_gamma;
std::map<std::pair<Partition, Partition>, FactoredValue> g_gammaF;
std::map<CellLabel, FactoredValue> g_detRec;

}  // namespace

RationalFn contentValue(const Content& c) { return mono(c.eq, c.er); }

Content stepContent(const Partition& from, const Partition& to) {
    Step s = stepBetween(from, to);
    if (s.add) return Content{1, 2 * (s.node.col - s.node.row)};
    return Content{-1, 2 * (s.node.row - s.node.col)};
}

RationalFn eLocal(const Partition& nu, const Partition& mu) {
    RationalFn c = contentValue(stepContent(nu, mu));
    RationalFn ci = c.inverse();
    RationalFn w = omega();
    RationalFn v = RationalFn(LaurentPoly::r()) * ci * (w + c - ci) / w;
    for (auto& s : neighbours(nu)) {
        if (s == mu) continue;
        RationalFn cs = contentValue(stepContent(nu, s));
        v *= (c - cs.inverse()) / (c - cs);
    }
    return v;
}

RationalFn eTT(const Tableau& t, int k) {
    int n = (int)t.size() - 1;
    if (k < 1 || k > n - 1 || t[k - 1] != t[k + 1])
        throw std::invalid_argument("eTT needs t_{k-1} = t_{k+1}");
    return eLocal(t[k - 1], t[k]);
}

RationalFn gammaAdd(const Partition& lambda, const Node& p) {
    int k = p.row;
    int cp = nodeContent(lambda, p, NodeKind::Removable);
    RationalFn v = -mono(2 * lambda[k - 1], 0);
    for (auto& x : addableNodes(lambda))
        if (x.row > k) v *= qintR(cp + nodeContent(lambda, x, NodeKind::Addable));
    for (auto& x : removableNodes(lambda))
        if (x.row > k) {
            int m = cp - nodeContent(lambda, x, NodeKind::Removable);
            if (m == 0) throw std::domain_error("gammaAdd: zero quantum integer in denominator");
            v /= qintR(m);
        }
    return v;
}

RationalFn gammaRemove(const Partition& lambda, const Partition& mu) {
    if (size(mu) != size(lambda) + 1) throw std::invalid_argument("mu must be lambda plus one box");
    Step st = stepBetween(lambda, mu);
    if (addNode(lambda, st.node) != mu) throw std::invalid_argument("mu must be lambda plus one box");
    Node p = st.node;
    int k = p.row, muk = mu[k - 1];
    if (k >= (int)lambda.size()) return qintR(muk) * eLocal(lambda, mu);

    Partition top(mu.begin(), mu.begin() + k), nu = top;
    if (--nu.back() == 0) nu.pop_back();
    RationalFn e = eLocal(nu, top);
    int cp = nodeContent(mu, p, NodeKind::Removable);
    RationalFn one(1);
    RationalFn v = qintR(muk) * e / (mono(2 * (muk - 2 * k), 2) - one);
    for (auto& x : addableNodes(mu))
        if (x.row > k) v *= mono(-2 * (cp - nodeContent(mu, x, NodeKind::Addable)), 2) - one;
    for (auto& x : removableNodes(mu))
        if (x.row > k) v /= mono(-2 * (cp + nodeContent(mu, x, NodeKind::Removable)), 2) - one;
    return v;
}

const RationalFn& gammaStep(const Partition& to, const Partition& from) {
    auto key = std::make_pair(to, from);
    {
        std::lock_guard<std::mutex> lk(g_memoMutex);
        auto it = g_gamma.find(key);
        if (it != g_gamma.end()) return it->second;
    }
    RationalFn v;
    if (size(to) > size(from))
        v = gammaAdd(to, stepBetween(from, to).node);
    else
        v = gammaRemove(to, from);
    std::lock_guard<std::mutex> lk(g_memoMutex);
    return g_gamma.emplace(key, v).first->second;
}

const FactoredValue& gammaStepFactored(const Partition& to, const Partition& from) {
    auto key = std::make_pair(to, from);
    {
        std::lock_guard<std::mutex> lk(g_memoMutex);
        auto it = g_gammaF.find(key);
        if (it != g_gammaF.end()) return it->second;
    }
    FactoredValue v = factorize(gammaStep(to, from));
    std::lock_guard<std::mutex> lk(g_memoMutex);
    return g_gammaF.emplace(key, v).first->second;
}

RationalFn normOf(const Tableau& t) {
    RationalFn v(1);
    for (size_t k = 1; k < t.size(); ++k) v *= gammaStep(t[k], t[k - 1]);
    return v;
}

GramDeterminant gramDetDirect(int n, int f, const Partition& lambda) {
    GramDeterminant g;
    g.n = n;
    g.cell = CellLabel{f, lambda};
    auto ts = enumUpDown(n, f, lambda);
    g.dim = ts.size();
    for (auto& t : ts) g.value *= factorize(normOf(t));
    return g;
}

static FactoredValue detRec(int n, const CellLabel& c) {
    if (n == 0) return FactoredValue();
    {
        std::lock_guard<std::mutex> lk(g_memoMutex);
        auto it = g_detRec.find(c);
        if (it != g_detRec.end()) return it->second;
    }
    FactoredValue v;
    for (auto& pr : branchingPredecessors(n, c.f, c.lambda)) {
        mpz_class d = cellDim(n - 1, pr.f, pr.lambda);
        v *= detRec(n - 1, pr);
        v *= gammaStepFactored(c.lambda, pr.lambda).pow(d.get_si());
    }
    std::lock_guard<std::mutex> lk(g_memoMutex);
    g_detRec.emplace(c, v);
    return v;
}

GramDeterminant gramDetRecursive(int n, int f, const Partition& lambda) {
    if (size(lambda) + 2 * f != n || f < 0) throw std::invalid_argument("cell not in Lambda_n");
    GramDeterminant g;
    g.n = n;
    g.cell = CellLabel{f, lambda};
    g.dim = cellDim(n, f, lambda);
    g.value = detRec(n, g.cell);
    return g;
}

void seedDeterminant(const CellLabel& cell, const FactoredValue& value) {
    std::lock_guard<std::mutex> lk(g_memoMutex);
    g_detRec.insert_or_assign(cell, value);
}

void clearGramMemo() {
    std::lock_guard<std::mutex> lk(g_memoMutex);
    g_detRec.clear();
}

RationalFn normStepCheck(const Tableau& t, int k) {
    int n = (int)t.size() - 1;
    if (k < 1 || k > n - 1 || t[k - 1] == t[k + 1]) throw std::invalid_argument("needs t_{k-1} != t_{k+1}");
    auto s = applyS(t, k);
    if (!s) throw std::invalid_argument("t s_k does not exist");
    if (!shapeGreater(t[k], (*s)[k])) throw std::invalid_argument("needs t s_k below t");
    RationalFn c1 = contentValue(contentAt(t, k)), c2 = contentValue(contentAt(t, k + 1));
    RationalFn w = omega();
    RationalFn d = c2 - c1;
    return RationalFn(1) - w * w * c1 * c2 / (d * d);
}

std::vector<std::pair<int, int>> detFactorsScan(int n, int f, const Partition& lambda) {
    std::vector<std::pair<int, int>> out;
    auto g = gramDetRecursive(n, f, lambda);
    for (auto& [a, e] : g.value.factors())
        if (a.kind == AtomKind::RMinus && e > 0) out.push_back({a.eps, a.a});
    return out;
}

bool dualFactorCheck(int n, int f, const Partition& lambda) {
    auto atoms = [](const FactoredValue& v) {
        std::set<std::pair<int, int>> s;
        for (auto& [a, e] : v.factors())
            if (a.kind == AtomKind::RMinus) s.insert({a.eps, a.a});
        return s;
    };
    auto s1 = atoms(gramDetRecursive(n, f, lambda).value);
    auto s2 = atoms(gramDetRecursive(n, f, conjugate(lambda)).value);
    std::set<std::pair<int, int>> img;
    for (auto& [e, a] : s1) img.insert({-e, -a});
    return img == s2;
}

bool isIntegral(const FactoredValue& v) {
    // quantum integers overlap, so decide on the expanded denominator
    LaurentPoly d = v.expand().den();
    LaurentPoly w = LaurentPoly::q(2) - LaurentPoly(1);
    while (!d.isMonomial() && divides(w, d)) d = exactDiv(d, w);
    return d.isMonomial() && abs(d.lead().c) == 1;
}

FactoredValue closedFormLine(int n) {
    if (n < 2) throw std::invalid_argument("closed form needs n >= 2");
    long N = n;
    FactoredValue v = FactoredValue::fromUnit(1, (int)((N - 1) * (3 * N - 4) / 2), 0);
    FactoredValue base = FactoredValue::fromUnit(1, 0, -1) / FactoredValue::fromAtom(Atom::q2m1());
    for (int j = 2; j <= n - 2; ++j) base *= FactoredValue::fromAtom(Atom::qint(j));
    v *= base.pow(N * (N - 1) / 2);
    v *= FactoredValue::fromAtom(Atom::rminus(1, 1), (int)(N * (N - 3) / 2));
    v *= FactoredValue::fromAtom(Atom::rminus(-1, 3), (int)((N - 1) * (N - 2) / 2));
    // r^2 - q^{6-2n} = (r - q^{3-n})(r + q^{3-n})
    v *= FactoredValue::fromAtom(Atom::rminus(1, 3 - n), n - 1);
    v *= FactoredValue::fromAtom(Atom::rminus(-1, 3 - n), n - 1);
    v *= FactoredValue::fromAtom(Atom::rminus(1, 3 - 2 * n), 1);
    return v;
}

}  // namespace bmw

#include "bmw/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bmw {

int size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

bool isPartition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

std::string partitionStr(const Partition& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

Partition parsePartition(const std::string& s) {
    Partition p;
    if (s.empty() || s == "∅") return p;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad partition: " + s);
        p.push_back(v);
    }
    if (!isPartition(p)) throw std::invalid_argument("not a partition: " + s);
    return p;
}

std::string tableauStr(const Tableau& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += "|";
        s += t[i].empty() ? "∅" : partitionStr(t[i]);
    }
    return s;
}

std::string cellStr(const CellLabel& c) { return std::to_string(c.f) + "|" + partitionStr(c.lambda); }

static void partRec(int n, int maxp, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxp); k >= 1; --k) {
        cur.push_back(k);
        partRec(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitionsOf(int n) {
    std::vector<Partition> out;
    Partition cur;
    if (n >= 0) partRec(n, n, cur, out);
    return out;
}

std::vector<Node> addableNodes(const Partition& p) {
    std::vector<Node> out;
    for (size_t i = 0; i <= p.size(); ++i) {
        int cur = i < p.size() ? p[i] : 0;
        if (i == 0 || cur < p[i - 1]) out.push_back(Node{(int)i + 1, cur + 1});
    }
    return out;
}

std::vector<Node> removableNodes(const Partition& p) {
    std::vector<Node> out;
    for (size_t i = 0; i < p.size(); ++i) {
        int nxt = i + 1 < p.size() ? p[i + 1] : 0;
        if (p[i] > nxt) out.push_back(Node{(int)i + 1, p[i]});
    }
    return out;
}

static bool contains(const std::vector<Node>& v, const Node& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

Partition addNode(const Partition& p, const Node& x) {
    if (!contains(addableNodes(p), x)) throw std::invalid_argument("node not addable");
    Partition q = p;
    if (x.row == (int)q.size() + 1)
        q.push_back(1);
    else
        q[x.row - 1]++;
    return q;
}

Partition removeNode(const Partition& p, const Node& x) {
    if (!contains(removableNodes(p), x)) throw std::invalid_argument("node not removable");
    Partition q = p;
    if (--q[x.row - 1] == 0) q.pop_back();
    return q;
}

int nodeContent(const Partition& p, const Node& x, NodeKind kind) {
    if (kind == NodeKind::Addable) {
        if (!contains(addableNodes(p), x)) throw std::invalid_argument("node is not addable");
        return x.col - x.row;
    }
    if (!contains(removableNodes(p), x)) throw std::invalid_argument("node is not removable");
    return x.row - x.col;
}

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    size_t m = std::max(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int x : p)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

int hookLength(const Partition& p, int i, int j) {
    Partition c = conjugate(p);
    return p[i - 1] + c[j - 1] - i - j + 1;
}

std::vector<CellLabel> cellLabels(int n) {
    std::vector<CellLabel> out;
    for (int f = 0; 2 * f <= n; ++f)
        for (auto& l : partitionsOf(n - 2 * f)) out.push_back(CellLabel{f, l});
    return out;
}

mpz_class doubleFactorial(long m) {
    mpz_class r = 1;
    for (long k = m; k > 1; k -= 2) r *= k;
    return r;
}

mpz_class cellDim(int n, int f, const Partition& lambda) {
    if (size(lambda) + 2 * f != n) throw std::invalid_argument("cell not in Lambda_n");
    mpz_class num, den;
    mpz_fac_ui(num.get_mpz_t(), n);
    num *= doubleFactorial(2 * f - 1);
    mpz_fac_ui(den.get_mpz_t(), 2 * f);
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) den *= hookLength(lambda, i + 1, j);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::vector<Partition> neighbours(const Partition& p) {
    std::vector<Partition> out;
    for (auto& x : removableNodes(p)) out.push_back(removeNode(p, x));
    for (auto& x : addableNodes(p)) out.push_back(addNode(p, x));
    return out;
}

static int distance(const Partition& a, const Partition& b) {
    int inter = 0;
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) inter += std::min(a[i], b[i]);
    return size(a) + size(b) - 2 * inter;
}

std::vector<Tableau> enumUpDown(int n, int f, const Partition& lambda) {
    if (size(lambda) + 2 * f != n || f < 0) throw std::invalid_argument("cell not in Lambda_n");
    std::vector<Tableau> out;
    Tableau path{Partition{}};
    auto rec = [&](auto&& self) -> void {
        int k = (int)path.size() - 1;
        if (k == n) {
            if (path.back() == lambda) out.push_back(path);
            return;
        }
        for (auto& nx : neighbours(path.back())) {
            if (distance(nx, lambda) > n - k - 1) continue;
            path.push_back(nx);
            self(self);
            path.pop_back();
        }
    };
    rec(rec);
    return out;
}

Step stepBetween(const Partition& from, const Partition& to) {
    int a = size(from), b = size(to);
    if (b == a + 1) {
        for (size_t i = 0; i < to.size(); ++i)
            if (i >= from.size() || to[i] != from[i]) return Step{Node{(int)i + 1, to[i]}, true};
    } else if (a == b + 1) {
        for (size_t i = 0; i < from.size(); ++i)
            if (i >= to.size() || to[i] != from[i]) return Step{Node{(int)i + 1, from[i]}, false};
    }
    throw std::invalid_argument("shapes differ by more than one box");
}

Content contentAt(const Tableau& t, int k) {
    Step s = stepBetween(t[k - 1], t[k]);
    if (s.add) return Content{1, 2 * (s.node.col - s.node.row)};
    return Content{-1, 2 * (s.node.row - s.node.col)};
}

std::vector<Content> contents(const Tableau& t) {
    std::vector<Content> out;
    for (size_t k = 1; k < t.size(); ++k) out.push_back(contentAt(t, (int)k));
    return out;
}

Tableau tLambda(int n, int f, const Partition& lambda) {
    if (size(lambda) + 2 * f != n) throw std::invalid_argument("cell not in Lambda_n");
    Tableau t{Partition{}};
    for (int i = 0; i < f; ++i) {
        t.push_back(Partition{1});
        t.push_back(Partition{});
    }
    Partition cur;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            if (i == cur.size())
                cur.push_back(1);
            else
                cur[i]++;
            t.push_back(cur);
        }
    return t;
}

std::vector<Tableau> simClass(const Tableau& t, int k) {
    int n = (int)t.size() - 1;
    if (k < 1 || k > n - 1) throw std::invalid_argument("class position out of range");
    std::vector<Tableau> out;
    for (auto& mu : neighbours(t[k - 1])) {
        auto nb = neighbours(mu);
        if (std::find(nb.begin(), nb.end(), t[k + 1]) == nb.end()) continue;
        Tableau s = t;
        s[k] = mu;
        out.push_back(s);
    }
    return out;
}

std::optional<Tableau> applyS(const Tableau& t, int k) {
    if (t[k - 1] == t[k + 1]) throw std::invalid_argument("applyS needs t_{k-1} != t_{k+1}");
    Step a = stepBetween(t[k - 1], t[k]), b = stepBetween(t[k], t[k + 1]);
    if (a.node.row == b.node.row || a.node.col == b.node.col) return std::nullopt;
    for (auto& s : simClass(t, k))
        if (s != t) return s;
    return std::nullopt;
}

bool shapeGreater(const Partition& a, const Partition& b) {
    if (size(a) != size(b)) return size(a) < size(b);
    return a != b && dominates(a, b);
}

std::vector<CellLabel> branchingPredecessors(int n, int f, const Partition& lambda) {
    if (size(lambda) + 2 * f != n) throw std::invalid_argument("cell not in Lambda_n");
    std::vector<CellLabel> out;
    for (auto& x : removableNodes(lambda)) out.push_back(CellLabel{f, removeNode(lambda, x)});
    if (f > 0)
        for (auto& x : addableNodes(lambda)) out.push_back(CellLabel{f - 1, addNode(lambda, x)});
    return out;
}

}  // namespace bmw

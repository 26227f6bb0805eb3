#include "bmw/seminormal.hpp"

#include "bmw/gram.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bmw {

namespace {
const RationalFn kZero;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }
}  // namespace

Matrix Matrix::identity(int n) { return scalar(n, RationalFn(1)); }

Matrix Matrix::scalar(int n, const RationalFn& c) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, c);
    return m;
}

const RationalFn& Matrix::at(int i, int j) const {
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? kZero : it->second;
}

void Matrix::set(int i, int j, const RationalFn& v) {
    if (v.isZero())
        rows_[i].erase(j);
    else
        rows_[i][j] = v;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (int i = 0; i < b.size(); ++i)
        for (auto& [j, v] : b.rows_[i]) c.set(i, j, c.at(i, j) + v);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(RationalFn(-1)); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
    Matrix c(a.size());
    for (int i = 0; i < a.size(); ++i) {
        std::map<int, RationalFn> acc;
        for (auto& [k, x] : a.rows_[i])
            for (auto& [j, y] : b.rows_[k]) acc[j] += x * y;
        for (auto& [j, v] : acc) c.set(i, j, v);
    }
    return c;
}

Matrix Matrix::scaled(const RationalFn& c) const {
    Matrix m(size());
    if (c.isZero()) return m;
    for (int i = 0; i < size(); ++i)
        for (auto& [j, v] : rows_[i]) m.rows_[i][j] = v * c;
    return m;
}

bool Matrix::isDiagonal() const {
    for (int i = 0; i < size(); ++i)
        for (auto& kv : rows_[i])
            if (kv.first != i) return false;
    return true;
}

std::vector<RationalFn> solveLinear(std::vector<std::vector<RationalFn>> a, std::vector<RationalFn> b) {
    size_t m = a.size();
    for (size_t c = 0; c < m; ++c) {
        size_t p = c;
        while (p < m && a[p][c].isZero()) ++p;
        if (p == m) throw std::runtime_error("non-generic block");
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        RationalFn iv = a[c][c].inverse();
        for (size_t j = c; j < m; ++j) a[c][j] *= iv;
        b[c] *= iv;
        for (size_t r = 0; r < m; ++r) {
            if (r == c || a[r][c].isZero()) continue;
            RationalFn f = a[r][c];
            for (size_t j = c; j < m; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    return b;
}

Matrix Matrix::inverse() const {
    int n = size();
    // connected components of the sparsity pattern
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < n; ++i)
        for (auto& kv : rows_[i]) parent[find(i)] = find(kv.first);
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) blocks[find(i)].push_back(i);

    Matrix inv(n);
    for (auto& [root, ids] : blocks) {
        (void)root;
        size_t m = ids.size();
        std::vector<std::vector<RationalFn>> a(m, std::vector<RationalFn>(m));
        for (size_t x = 0; x < m; ++x)
            for (size_t y = 0; y < m; ++y) a[x][y] = at(ids[x], ids[y]);
        for (size_t col = 0; col < m; ++col) {
            std::vector<RationalFn> e(m);
            e[col] = RationalFn(1);
            auto x = solveLinear(a, e);
            for (size_t r = 0; r < m; ++r) inv.set(ids[r], ids[col], x[r]);
        }
    }
    return inv;
}

std::vector<std::vector<int>> simClasses(const RepBlock& rep, int i) {
    std::map<Tableau, int> slot;
    std::vector<std::vector<int>> out;
    for (int x = 0; x < (int)rep.basis.size(); ++x) {
        Tableau key = rep.basis[x];
        key.erase(key.begin() + i);
        auto [it, fresh] = slot.emplace(key, (int)out.size());
        if (fresh) out.emplace_back();
        out[it->second].push_back(x);
    }
    return out;
}

RepBlock buildRep(int n, int f, const Partition& lambda) {
    RepBlock rep;
    rep.n = n;
    rep.cell = CellLabel{f, lambda};
    rep.basis = enumUpDown(n, f, lambda);
    int N = (int)rep.basis.size();
    auto cval = [&](int x, int k) { return contentValue(contentAt(rep.basis[x], k)); };

    rep.L.assign(n + 1, Matrix(N));
    for (int k = 1; k <= n; ++k)
        for (int x = 0; x < N; ++x) rep.L[k].set(x, x, cval(x, k));

    RationalFn w = omega(), q(LaurentPoly::q()), rinv(LaurentPoly::r(-1));
    rep.T.assign(n, Matrix(N));
    rep.E.assign(n, Matrix(N));
    for (int i = 1; i < n; ++i) {
        Matrix& T = rep.T[i];
        Matrix& E = rep.E[i];
        for (auto& cls : simClasses(rep, i)) {
            const Tableau& t = rep.basis[cls[0]];
            if (t[i - 1] != t[i + 1]) {
                if (cls.size() == 1) {
                    Step a = stepBetween(t[i - 1], t[i]), b = stepBetween(t[i], t[i + 1]);
                    if (a.node.row == b.node.row)
                        T.set(cls[0], cls[0], q);
                    else if (a.node.col == b.node.col)
                        T.set(cls[0], cls[0], -q.inverse());
                    else
                        throw std::logic_error("singleton class with steps in different rows and columns");
                    continue;
                }
                if (cls.size() != 2) throw std::logic_error("class of size > 2 with t_{i-1} != t_{i+1}");
                int big = cls[0], small = cls[1];
                if (!shapeGreater(rep.basis[big][i], rep.basis[small][i])) std::swap(big, small);
                for (int u : {big, small}) {
                    RationalFn c1 = cval(u, i), c2 = cval(u, i + 1);
                    T.set(u, u, w * c2 / (c2 - c1));
                }
                RationalFn c1 = cval(big, i), c2 = cval(big, i + 1), d = c2 - c1;
                T.set(big, small, RationalFn(1));
                T.set(small, big, RationalFn(1) - w * w * c1 * c2 / (d * d));
                continue;
            }
            // rank-one E block, gauge E_ab = e_a y_b / y_a with y = e / gamma(last step)
            size_t m = cls.size();
            std::vector<RationalFn> e(m), y(m), d1(m), d2(m);
            for (size_t a = 0; a < m; ++a) {
                const Tableau& u = rep.basis[cls[a]];
                e[a] = eTT(u, i);
                y[a] = e[a] / gammaStep(u[i + 1], u[i]);
                d1[a] = cval(cls[a], i);
                d2[a] = cval(cls[a], i + 1);
            }
            std::vector<std::vector<RationalFn>> Eb(m, std::vector<RationalFn>(m));
            for (size_t a = 0; a < m; ++a)
                for (size_t b = 0; b < m; ++b) {
                    Eb[a][b] = a == b ? e[a] : e[a] * y[b] / y[a];
                    E.set(cls[a], cls[b], Eb[a][b]);
                }
            // X D2 - D1 X + w r^-1 E D1 X = w D2, one column at a time
            for (size_t sc = 0; sc < m; ++sc) {
                std::vector<std::vector<RationalFn>> A(m, std::vector<RationalFn>(m));
                for (size_t a = 0; a < m; ++a) {
                    A[a][a] += d2[sc] - d1[a];
                    for (size_t u = 0; u < m; ++u) A[a][u] += w * rinv * Eb[a][u] * d1[u];
                }
                std::vector<RationalFn> rhs(m);
                rhs[sc] = w * d2[sc];
                auto x = solveLinear(A, rhs);
                for (size_t a = 0; a < m; ++a) T.set(cls[a], cls[sc], x[a]);
            }
        }
    }
    return rep;
}

namespace {

struct Checker {
    const RepBlock& rep;
    std::vector<RelationResult> out;

    RelationResult& start(const std::string& name) {
        out.push_back(RelationResult{name, true, "", 0});
        return out.back();
    }
    // records the first failing entry of lhs - rhs
    static bool expect(RelationResult& res, const Matrix& lhs, const Matrix& rhs, const std::string& where) {
        if (!res.pass) return false;
        if (lhs == rhs) return true;
        Matrix d = lhs - rhs;
        for (int i = 0; i < d.size(); ++i)
            if (!d.row(i).empty()) {
                auto& [j, v] = *d.row(i).begin();
                std::ostringstream os;
                os << where << ": entry (" << i << "," << j << ") differs by " << v.str();
                res.detail = os.str();
                break;
            }
        res.pass = false;
        return false;
    }
};

}  // namespace

bool CertReport::allPass() const {
    for (auto& r : relations)
        if (!r.pass) return false;
    return true;
}

nlohmann::json CertReport::toJson() const {
    nlohmann::json rels = nlohmann::json::array();
    for (auto& r : relations) {
        nlohmann::json j{{"relation", r.name}, {"pass", r.pass}, {"seconds", r.seconds}};
        if (!r.pass) j["detail"] = r.detail;
        rels.push_back(j);
    }
    return {{"n", n},          {"f", cell.f},         {"lambda", partitionStr(cell.lambda)},
            {"dim", dim},      {"pass", allPass()},   {"build_seconds", buildSeconds},
            {"relations", rels}};
}

CertReport certifyRelations(const RepBlock& rep) {
    CertReport rpt;
    rpt.n = rep.n;
    rpt.cell = rep.cell;
    int N = (int)rep.basis.size();
    rpt.dim = N;
    int n = rep.n;
    Checker ck{rep, {}};
    Matrix I = Matrix::identity(N);
    RationalFn q(LaurentPoly::q()), r(LaurentPoly::r()), w = omega(), delta = deltaParam();
    RationalFn qi = q.inverse(), ri = r.inverse();
    auto at = [](const char* tag, int i, int j = 0) {
        std::ostringstream os;
        os << tag << "=" << i;
        if (j) os << ",j=" << j;
        return os.str();
    };
    auto timed = [&](const std::string& name, const std::function<void(RelationResult&)>& body) {
        auto t0 = Clock::now();
        RelationResult& res = ck.start(name);
        body(res);
        ck.out.back().seconds = since(t0);
    };

    std::vector<Matrix> Tinv(n);
    for (int i = 1; i < n; ++i) Tinv[i] = rep.T[i].inverse();

    timed("cubic", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i) {
            const Matrix& T = rep.T[i];
            Matrix c = (T - I.scaled(q)) * (T + I.scaled(qi)) * (T - I.scaled(ri));
            Checker::expect(res, c, Matrix(N), at("i", i));
        }
    });
    timed("braid", [&](RelationResult& res) {
        for (int i = 1; i + 1 < n; ++i) {
            const Matrix &A = rep.T[i], &B = rep.T[i + 1];
            Checker::expect(res, A * B * A, B * A * B, at("i", i));
        }
    });
    timed("commute", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                Checker::expect(res, rep.T[i] * rep.T[j], rep.T[j] * rep.T[i], at("i", i, j));
                Checker::expect(res, rep.E[i] * rep.E[j], rep.E[j] * rep.E[i], at("i", i, j));
                Checker::expect(res, rep.T[i] * rep.E[j], rep.E[j] * rep.T[i], at("i", i, j));
            }
    });
    timed("E_i T_j E_i = r E_i", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i)
            for (int j : {i - 1, i + 1})
                if (j >= 1 && j < n) Checker::expect(res, rep.E[i] * rep.T[j] * rep.E[i], rep.E[i].scaled(r), at("i", i, j));
    });
    timed("E_i T_j^-1 E_i = r^-1 E_i", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i)
            for (int j : {i - 1, i + 1})
                if (j >= 1 && j < n) Checker::expect(res, rep.E[i] * Tinv[j] * rep.E[i], rep.E[i].scaled(ri), at("i", i, j));
    });
    timed("E_i T_i = T_i E_i = r^-1 E_i", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i) {
            Checker::expect(res, rep.E[i] * rep.T[i], rep.E[i].scaled(ri), at("i", i));
            Checker::expect(res, rep.T[i] * rep.E[i], rep.E[i].scaled(ri), at("i", i));
        }
    });
    timed("E_i = 1 - w^-1 (T_i - T_i^-1)", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i)
            Checker::expect(res, rep.E[i], I - (rep.T[i] - Tinv[i]).scaled(w.inverse()), at("i", i));
    });
    timed("E_i^2 = delta E_i", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i) Checker::expect(res, rep.E[i] * rep.E[i], rep.E[i].scaled(delta), at("i", i));
    });
    timed("E_i E_j E_i = E_i", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i)
            for (int j : {i - 1, i + 1})
                if (j >= 1 && j < n) Checker::expect(res, rep.E[i] * rep.E[j] * rep.E[i], rep.E[i], at("i", i, j));
    });
    timed("E_i E_j = T_j T_i E_j", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i)
            for (int j : {i - 1, i + 1})
                if (j >= 1 && j < n)
                    Checker::expect(res, rep.E[i] * rep.E[j], rep.T[j] * rep.T[i] * rep.E[j], at("i", i, j));
    });
    timed("L_{i+1} = T_i L_i T_i", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i) Checker::expect(res, rep.L[i + 1], rep.T[i] * rep.L[i] * rep.T[i], at("i", i));
    });
    timed("T_i L_i L_{i+1} = L_i L_{i+1} T_i", [&](RelationResult& res) {
        for (int i = 1; i < n; ++i) {
            Matrix LL = rep.L[i] * rep.L[i + 1];
            Checker::expect(res, rep.T[i] * LL, LL * rep.T[i], at("i", i));
        }
    });
    rpt.relations = std::move(ck.out);
    return rpt;
}

CertReport certifyCell(int n, int f, const Partition& lambda) {
    auto t0 = Clock::now();
    RepBlock rep = buildRep(n, f, lambda);
    double b = since(t0);
    CertReport rpt = certifyRelations(rep);
    rpt.buildSeconds = b;
    return rpt;
}

RationalFn centralScalar(const RepBlock& rep) {
    int N = (int)rep.basis.size();
    Matrix m = Matrix::identity(N);
    for (int k = 2; k <= rep.n; ++k) m = m * rep.L[k];
    if (!m.isDiagonal()) throw std::runtime_error("centrality violated");
    RationalFn c = N ? m.at(0, 0) : RationalFn(1);
    for (int x = 1; x < N; ++x)
        if (m.at(x, x) != c) throw std::runtime_error("centrality violated");
    return c;
}

}  // namespace bmw

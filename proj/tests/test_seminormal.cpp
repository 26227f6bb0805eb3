#include "bmw/gram.hpp"
#include "bmw/seminormal.hpp"

#include "doctest.h"

using namespace bmw;

namespace {
RationalFn Q(int e) { return RationalFn(LaurentPoly::q(e)); }
RationalFn R(int e) { return RationalFn(LaurentPoly::r(e)); }

std::string failures(const CertReport& rpt) {
    std::string s;
    for (auto& r : rpt.relations)
        if (!r.pass) s += r.name + " [" + r.detail + "] ";
    return s;
}
}  // namespace

TEST_CASE("matrix basics") {
    Matrix a(2);
    a.set(0, 0, Q(1));
    a.set(0, 1, RationalFn(1));
    a.set(1, 1, R(1));
    Matrix ai = a.inverse();
    CHECK(a * ai == Matrix::identity(2));
    CHECK(ai * a == Matrix::identity(2));
    a.set(0, 1, RationalFn(0));
    CHECK(a.isDiagonal());
    Matrix s(2);
    s.set(0, 1, RationalFn(1));
    CHECK_THROWS_WITH(Matrix(2).inverse(), "non-generic block");
    CHECK_THROWS_WITH(s.inverse(), "non-generic block");
}

TEST_CASE("n = 2 blocks") {
    auto r2 = buildRep(2, 0, {2});
    CHECK(r2.T[1].at(0, 0) == Q(1));
    CHECK(r2.E[1].at(0, 0).isZero());
    auto r0 = buildRep(2, 1, {});
    CHECK(r0.T[1].at(0, 0) == R(-1));
    CHECK(r0.E[1].at(0, 0) == deltaParam());
    CHECK(centralScalar(r0) == R(-1));
}

TEST_CASE("all relations hold on Lambda_3 and Lambda_4") {
    for (int n = 1; n <= 4; ++n)
        for (auto& c : cellLabels(n)) {
            auto rpt = certifyCell(n, c.f, c.lambda);
            CHECK_MESSAGE(rpt.allPass(), cellStr(c), " ", failures(rpt));
            CHECK(rpt.relations.size() == 12);
        }
}

TEST_CASE("E diagonal, traces and central element, n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (auto& c : cellLabels(n)) {
            auto rep = buildRep(n, c.f, c.lambda);
            RationalFn cs = centralScalar(rep);
            auto cont = contents(rep.basis[0]);
            RationalFn prod(1);
            for (int k = 2; k <= n; ++k) prod *= contentValue(cont[k - 1]);
            CHECK(cs == prod);
            for (int i = 1; i < n; ++i) {
                int eclasses = 0;
                RationalFn total;
                for (auto& cls : simClasses(rep, i)) {
                    const Tableau& t = rep.basis[cls[0]];
                    RationalFn tr;
                    for (int x : cls) {
                        tr += rep.E[i].at(x, x);
                        if (t[i - 1] == t[i + 1]) {
                            CHECK(rep.E[i].at(x, x) == eTT(rep.basis[x], i));
                        } else {
                            CHECK(rep.E[i].row(x).empty());
                        }
                    }
                    if (t[i - 1] == t[i + 1]) {
                        ++eclasses;
                        CHECK(tr == deltaParam());
                    }
                    total += tr;
                }
                CHECK(total == deltaParam() * RationalFn(eclasses));
            }
        }
}

TEST_CASE("mutation is detected") {
    auto rep = buildRep(3, 1, {1});
    auto clean = certifyRelations(rep);
    REQUIRE(clean.allPass());
    bool flipped = false;
    for (int x = 0; x < 3 && !flipped; ++x)
        for (auto& [j, v] : rep.T[2].row(x))
            if (j != x) {
                rep.T[2].set(x, j, -v);
                flipped = true;
                break;
            }
    REQUIRE(flipped);
    auto bad = certifyRelations(rep);
    bool braidFails = false;
    for (auto& r : bad.relations)
        if (r.name == "braid") braidFails = !r.pass && !r.detail.empty();
    CHECK(braidFails);
}

TEST_CASE("report json") {
    auto rpt = certifyCell(3, 1, {1});
    auto j = rpt.toJson();
    CHECK(j["pass"] == true);
    CHECK(j["dim"] == 3);
    CHECK(j["lambda"] == "1");
    CHECK(j["relations"].size() == 12);
}

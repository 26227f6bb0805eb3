#include "doctest.h"

#include "bmw/combinatorics.hpp"

#include <set>

using namespace bmw;

TEST_CASE("cell labels") {
    auto c2 = cellLabels(2);
    REQUIRE(c2.size() == 3);
    CHECK(c2[0] == CellLabel{0, {2}});
    CHECK(c2[1] == CellLabel{0, {1, 1}});
    CHECK(c2[2] == CellLabel{1, {}});
    CHECK(cellLabels(4).size() == 8);
    auto c3 = cellLabels(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0] == CellLabel{0, {3}});
    CHECK(c3[1] == CellLabel{0, {2, 1}});
    CHECK(c3[2] == CellLabel{0, {1, 1, 1}});
    CHECK(c3[3] == CellLabel{1, {1}});
}

TEST_CASE("node contents") {
    CHECK(nodeContent({2}, Node{1, 3}, NodeKind::Addable) == 2);
    CHECK(nodeContent({2}, Node{1, 2}, NodeKind::Removable) == -1);
    auto add = addableNodes({2, 1});
    REQUIRE(add.size() == 3);
    std::vector<int> cs;
    for (auto& x : add) cs.push_back(nodeContent({2, 1}, x, NodeKind::Addable));
    CHECK(cs == std::vector<int>{2, 0, -2});
    CHECK_THROWS(nodeContent({2}, Node{1, 1}, NodeKind::Removable));
    CHECK_THROWS(nodeContent({2}, Node{2, 2}, NodeKind::Addable));
}

TEST_CASE("dimensions") {
    CHECK(cellDim(3, 1, {1}) == 3);
    CHECK(cellDim(4, 2, {}) == 3);
    mpz_class s = 0;
    for (auto& c : cellLabels(4)) {
        mpz_class d = cellDim(4, c.f, c.lambda);
        s += d * d;
    }
    CHECK(s == 105);
    CHECK(cellDim(5, 1, {3}) == 10);
}

TEST_CASE("enumeration") {
    auto t = enumUpDown(2, 1, {});
    REQUIRE(t.size() == 1);
    CHECK(tableauStr(t[0]) == "∅|1|∅");
    CHECK(enumUpDown(3, 1, {1}).size() == 3);
    CHECK(enumUpDown(5, 1, {3}).size() == 10);
    // removals before additions: first tableau of (1,(1)) at n=3 goes through ∅
    CHECK(tableauStr(enumUpDown(3, 1, {1})[0]) == "∅|1|∅|1");
    for (int n = 1; n <= 7; ++n)
        for (auto& c : cellLabels(n)) {
            auto ts = enumUpDown(n, c.f, c.lambda);
            CHECK(mpz_class(ts.size()) == cellDim(n, c.f, c.lambda));
            std::set<Tableau> u(ts.begin(), ts.end());
            CHECK(u.size() == ts.size());
        }
}

TEST_CASE("contents") {
    Tableau t{{}, {1}, {}};
    auto c = contents(t);
    CHECK(c == std::vector<Content>{{1, 0}, {-1, 0}});
    Tableau u{{}, {1}, {2}, {1}};
    CHECK(contents(u) == std::vector<Content>{{1, 0}, {1, 2}, {-1, -2}});
    // distinct content strings, n=4, (2)
    auto ts = enumUpDown(4, 1, {2});
    CHECK(ts.size() == 6);
    std::set<std::vector<std::pair<int, int>>> seen;
    for (auto& s : ts) {
        std::vector<std::pair<int, int>> v;
        for (auto& x : contents(s)) v.push_back({x.er, x.eq});
        seen.insert(v);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("maximal tableau") {
    CHECK(tableauStr(tLambda(2, 1, {})) == "∅|1|∅");
    CHECK(tableauStr(tLambda(4, 1, {2})) == "∅|1|∅|1|2");
    CHECK(tableauStr(tLambda(3, 0, {2, 1})) == "∅|1|2|2,1");
}

TEST_CASE("k-classes and s_k") {
    Tableau t{{}, {1}, {}};
    CHECK(simClass(t, 1).size() == 1);
    Tableau u = tLambda(4, 1, {2});
    // t_1 = t_3 = (1): one removable + two addable nodes
    CHECK(simClass(u, 2).size() == 3);
    CHECK_FALSE(applyS(Tableau{{}, {1}, {2}}, 1).has_value());
    CHECK_FALSE(applyS(Tableau{{}, {1}, {1, 1}}, 1).has_value());
    auto s = applyS(Tableau{{}, {1}, {2}, {2, 1}}, 2);
    REQUIRE(s.has_value());
    CHECK(tableauStr(*s) == "∅|1|1,1|2,1");
    CHECK(contentAt(*s, 2) == contentAt(Tableau{{}, {1}, {2}, {2, 1}}, 3));
    CHECK_THROWS(applyS(t, 1));
}

TEST_CASE("branching") {
    auto p = branchingPredecessors(3, 1, {1});
    REQUIRE(p.size() == 3);
    CHECK(p[0] == CellLabel{1, {}});
    CHECK(p[1] == CellLabel{0, {2}});
    CHECK(p[2] == CellLabel{0, {1, 1}});
    CHECK(branchingPredecessors(4, 0, {4}) == std::vector<CellLabel>{{0, {3}}});
    CHECK(branchingPredecessors(4, 2, {}) == std::vector<CellLabel>{{1, {1}}});
    for (int n = 2; n <= 6; ++n)
        for (auto& c : cellLabels(n)) {
            mpz_class s = 0;
            for (auto& pr : branchingPredecessors(n, c.f, c.lambda)) s += cellDim(n - 1, pr.f, pr.lambda);
            CHECK(s == cellDim(n, c.f, c.lambda));
        }
}

TEST_CASE("conjugate") {
    CHECK(conjugate({3}) == Partition{1, 1, 1});
    CHECK(conjugate({2, 1}) == Partition{2, 1});
    CHECK(conjugate({3, 2}) == Partition{2, 2, 1});
}

TEST_CASE("partition parsing") {
    CHECK(parsePartition("2,1") == Partition{2, 1});
    CHECK(parsePartition("").empty());
    CHECK_THROWS(parsePartition("1,2"));
    CHECK_THROWS(parsePartition("a"));
    CHECK(partitionStr({3, 1}) == "3,1");
}

#include "bmw/gram.hpp"
#include "bmw/semisimple.hpp"

#include "doctest.h"

#include <set>

using namespace bmw;

namespace {
FieldSpec pw(int eps, int a, std::optional<long> m = std::nullopt, unsigned long p = 0) {
    FieldSpec s;
    s.r = RSpec::powerOfQ(eps, a);
    s.qOrder = m;
    s.characteristic = p;
    return s;
}
}  // namespace

TEST_CASE("decide: listed examples") {
    FieldSpec g;
    auto v = decideSemisimple(3, g);
    CHECK(v.semisimple);
    CHECK(v.clause == "a1");
    v = decideSemisimple(5, pw(1, -5));
    CHECK_FALSE(v.semisimple);
    CHECK(v.witness == "r-q^-5");
    v = decideSemisimple(4, pw(-1, 1));
    CHECK_FALSE(v.semisimple);
    CHECK(v.clause == "b1");
    v = decideSemisimple(3, pw(1, -1));
    CHECK(v.semisimple);
    CHECK(v.clause == "b3");
    CHECK(decideSemisimple(1, pw(1, -1)).semisimple);
    CHECK_FALSE(decideSemisimple(7, pw(-1, 1)).semisimple);
    CHECK_FALSE(decideSemisimple(2, pw(1, -1)).semisimple);
}

TEST_CASE("decide: finite order and characteristic") {
    CHECK_FALSE(decideSemisimple(3, pw(1, 7, 3)).semisimple);
    CHECK(decideSemisimple(3, pw(1, 2, 4)).semisimple);
    CHECK(decideSemisimple(3, pw(1, 7, 4)).clause == "b3");  // q^7 = q^-1 when q^8 = 1
    CHECK_FALSE(decideSemisimple(2, pw(1, 7, 2)).semisimple);
    CHECK(decideSemisimple(2, pw(1, 7, 3)).semisimple);
    // b3: q^4+1 = 0 exactly when o(q^2) = 4
    CHECK_FALSE(decideSemisimple(3, pw(1, -1, 4)).semisimple);
    CHECK(decideSemisimple(3, pw(1, -1, 5)).semisimple);
    // b4
    CHECK(decideSemisimple(5, pw(-1, 1)).semisimple);
    CHECK_FALSE(decideSemisimple(5, pw(-1, 1, std::nullopt, 2)).semisimple);
    CHECK_FALSE(decideSemisimple(5, pw(-1, 1, 6)).semisimple);
    CHECK_FALSE(decideSemisimple(5, pw(-1, 1, 8)).semisimple);
    CHECK(decideSemisimple(5, pw(-1, 1, 7)).semisimple);
    CHECK(decideSemisimple(5, pw(-1, 1, 9)).semisimple);
    // exponents reduce mod 2m: with o(q^2) = 10, q^20 = 1 so r = q^17 is r = q^-3
    CHECK_FALSE(decideSemisimple(3, pw(1, 17, 10)).semisimple);
    CHECK(decideSemisimple(3, pw(1, 16, 10)).semisimple);
    // q^10 = -1: -q^13 = q^3 is allowed, q^13 = -q^3 is not
    CHECK(decideSemisimple(3, pw(-1, 13, 10)).semisimple);
    CHECK_FALSE(decideSemisimple(3, pw(1, 13, 10)).semisimple);
    CHECK_THROWS(decideSemisimple(3, pw(1, 0, 1)));
    CHECK_THROWS(decideSemisimple(3, pw(1, 0, 6, 3)));
    CHECK_THROWS(decideSemisimple(3, pw(1, 0, std::nullopt, 4)));
}

TEST_CASE("decide: numeric parameters") {
    FieldSpec s;
    s.r = RSpec::numeric(2, 3);
    CHECK(decideSemisimple(5, s).semisimple);
    s.r = RSpec::numeric(2, mpq_class(1, 8));  // q^-3
    CHECK_FALSE(decideSemisimple(3, s).semisimple);
    s.r = RSpec::numeric(2, mpq_class(1, 2));  // q^-1
    CHECK(decideSemisimple(3, s).clause == "b3");
    s.characteristic = 7;  // q = 2 has o(q^2) = 3 in F_7
    s.r = RSpec::numeric(2, 3);
    CHECK_FALSE(decideSemisimple(3, s).semisimple);
    CHECK(decideSemisimple(2, s).semisimple);
    s.qOrder = 5;
    CHECK_THROWS(decideSemisimple(2, s));
    s.qOrder.reset();
    s.r = RSpec::numeric(1, 3);
    CHECK_THROWS(decideSemisimple(2, s));
}

TEST_CASE("monotone failure in n") {
    for (int n = 3; n <= 7; ++n)
        for (int eps : {1, -1})
            for (int a = -15; a <= 15; ++a) {
                if ((eps == 1 && a == -1) || (eps == -1 && a == 1)) continue;
                if (!decideSemisimple(n, pw(eps, a)).semisimple) CHECK_FALSE(decideSemisimple(n + 2, pw(eps, a)).semisimple);
            }
}

TEST_CASE("cross-check against determinants") {
    CHECK(crossCheckCriterion(4, pw(1, -3)));
    CHECK_FALSE(crossCheckDetail(4, 1, -3).determinantsNonzero);
    CHECK(crossCheckCriterion(4, pw(1, 100)));
    CHECK(crossCheckDetail(4, 1, 100).determinantsNonzero);
    CHECK_THROWS(crossCheckCriterion(4, pw(1, -1)));
    std::set<std::pair<int, int>> zeros;
    for (int n = 3; n <= 5; ++n)
        for (int eps : {1, -1})
            for (int a = -2 * n - 1; a <= 2 * n + 1; ++a) {
                if ((eps == 1 && a == -1) || (eps == -1 && a == 1)) continue;
                auto cc = crossCheckDetail(n, eps, a);
                CHECK_MESSAGE(cc.agree, n, " ", eps, " ", a);
                if (n == 3 && !cc.determinantsNonzero) zeros.insert({eps, a});
            }
    CHECK(zeros == std::set<std::pair<int, int>>{{1, -3}, {1, 0}, {-1, 0}, {-1, 3}});
}

TEST_CASE("factor scan") {
    auto s = detFactorsScan(5, 1, {3});
    std::set<std::pair<int, int>> got(s.begin(), s.end());
    CHECK(got == std::set<std::pair<int, int>>{{1, 1}, {-1, 3}, {1, -2}, {-1, -2}, {1, -7}});
}

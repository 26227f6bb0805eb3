#include "bmw/semisimple.hpp"

#include "bmw/gram.hpp"
#include "bmw/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace bmw {

RSpec RSpec::powerOfQ(int eps, int a) {
    RSpec s;
    s.kind = Kind::PowerOfQ;
    s.eps = eps;
    s.a = a;
    return s;
}

RSpec RSpec::numeric(const mpq_class& q0, const mpq_class& r0) {
    RSpec s;
    s.kind = Kind::Numeric;
    s.q0 = q0;
    s.r0 = r0;
    return s;
}

std::string RSpec::str() const {
    switch (kind) {
    case Kind::Generic: return "generic";
    case Kind::PowerOfQ: return std::string(eps > 0 ? "+" : "-") + "q^" + std::to_string(a);
    case Kind::Numeric: return "numeric:" + q0.get_str() + "," + r0.get_str();
    }
    return "";
}

namespace {

// multiplicative order of x in F_p, x != 0
long orderModP(const mpq_class& x, unsigned long p) {
    Field F{p};
    unsigned long m = p - 1;
    long best = (long)m;
    std::vector<unsigned long> primes;
    for (unsigned long d = 2, t = m; t > 1; ++d) {
        if (d * d > t) {
            primes.push_back(t);
            break;
        }
        if (t % d == 0) {
            primes.push_back(d);
            while (t % d == 0) t /= d;
        }
    }
    for (auto pr : primes)
        while (best % pr == 0 && fieldPow(x, best / pr, F) == 1) best /= pr;
    return best;
}

bool isPrime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct Ctx {
    const FieldSpec& spec;
    Field F;
    std::optional<long> m;  // o(q^2)

    bool charTwo() const { return spec.characteristic == 2; }
    bool numeric() const { return spec.r.kind == RSpec::Kind::Numeric; }

    // q^d == s (s = +-1), symbolic q
    bool qPowIs(long d, int s) const {
        if (charTwo()) s = 1;
        if (!m) return d == 0 && s == 1;
        long period = charTwo() ? *m : 2 * *m;
        long rdm = ((d % period) + period) % period;
        if (s == 1) return rdm == 0;
        return rdm == *m;
    }
    // eps1 q^a1 == eps2 q^a2
    bool powEq(int e1, long a1, int e2, long a2) const {
        if (numeric()) {
            return toField(e1 * fieldPow(spec.r.q0, a1, F), F) == toField(e2 * fieldPow(spec.r.q0, a2, F), F);
        }
        return qPowIs(a1 - a2, e1 * e2);
    }
    // r == eps q^a
    bool rIs(int eps, long a) const {
        switch (spec.r.kind) {
        case RSpec::Kind::Generic: return false;
        case RSpec::Kind::PowerOfQ: return powEq(spec.r.eps, spec.r.a, eps, a);
        case RSpec::Kind::Numeric: return toField(spec.r.r0, F) == toField(eps * fieldPow(spec.r.q0, a, F), F);
        }
        return false;
    }
    // q^{2k} + 1 == 0
    bool q2kPlusOneZero(long k) const {
        if (numeric()) return toField(fieldPow(spec.r.q0, 2 * k, F) + 1, F) == 0;
        return qPowIs(2 * k, -1);
    }
    bool orderAbove(long n) const { return !m || *m > n; }
};

std::optional<long> effectiveOrder(const FieldSpec& spec) {
    if (spec.r.kind != RSpec::Kind::Numeric) return spec.qOrder;
    Field F{spec.characteristic};
    mpq_class q2 = toField(spec.r.q0 * spec.r.q0, F);
    if (!F.isPrime()) {
        if (q2 == 1) return 1;
        return std::nullopt;  // only +-1 have finite order in Q, and q^2 != 1
    }
    return orderModP(q2, F.p);
}

std::string atomFor(int eps, long a) { return Atom::rminus(eps, (int)a).str(); }

}  // namespace

void validate(const FieldSpec& spec) {
    if (spec.characteristic != 0 && !isPrime(spec.characteristic))
        throw std::invalid_argument("characteristic must be 0 or a prime");
    if (spec.qOrder && *spec.qOrder < 2) throw std::invalid_argument("o(q^2) must be at least 2 (q^2 != 1)");
    if (spec.qOrder && spec.characteristic && *spec.qOrder % (long)spec.characteristic == 0)
        throw std::invalid_argument("o(q^2) must be prime to the characteristic");
    if (spec.r.kind == RSpec::Kind::PowerOfQ && spec.r.eps != 1 && spec.r.eps != -1)
        throw std::invalid_argument("sign must be +1 or -1");
    if (spec.r.kind == RSpec::Kind::Numeric) {
        Field F{spec.characteristic};
        mpq_class q0 = toField(spec.r.q0, F), r0 = toField(spec.r.r0, F);
        if (q0 == 0 || r0 == 0 || toField(q0 * q0 - 1, F) == 0)
            throw std::invalid_argument("q, r and q - q^-1 must be nonzero");
        auto m = effectiveOrder(spec);
        if (spec.qOrder && m != spec.qOrder) throw std::invalid_argument("qorder disagrees with numeric q");
    }
}

Verdict decideSemisimple(int n, const FieldSpec& spec) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    validate(spec);
    Ctx c{spec, Field{spec.characteristic}, effectiveOrder(spec)};
    Verdict v;
    auto orderText = [&] { return c.m ? std::to_string(*c.m) : std::string("inf"); };

    if (n == 1) {
        v.semisimple = true;
        v.clause = "a3";
        v.reasons.push_back("n = 1");
        return v;
    }
    bool special = c.rIs(1, -1) || c.rIs(-1, 1);
    if (special) {
        std::string which = c.rIs(1, -1) ? "r = q^-1" : "r = -q";
        if (n % 2 == 0 || n >= 7) {
            v.semisimple = false;
            v.clause = "b1";
            v.reasons.push_back(which + " and n " + (n % 2 == 0 ? "even" : "odd >= 7"));
            v.witness = "delta = 0";
            return v;
        }
        if (n == 3) {
            v.clause = "b3";
            v.reasons.push_back(which);
            if (!c.orderAbove(3)) {
                v.witness = "o(q^2) = " + orderText() + " <= 3";
            } else if (c.q2kPlusOneZero(2)) {
                v.witness = "q^4+1 = 0";
            }
            v.semisimple = v.witness.empty();
            v.reasons.push_back(v.semisimple ? "o(q^2) > 3 and q^4+1 != 0" : v.witness);
            return v;
        }
        // n == 5
        v.clause = "b4";
        v.reasons.push_back(which);
        if (!c.orderAbove(5))
            v.witness = "o(q^2) = " + orderText() + " <= 5";
        else if (c.q2kPlusOneZero(3))
            v.witness = "q^6+1 = 0";
        else if (c.q2kPlusOneZero(4))
            v.witness = "q^8+1 = 0";
        else if (c.charTwo())
            v.witness = "characteristic 2";
        v.semisimple = v.witness.empty();
        v.reasons.push_back(v.semisimple ? "o(q^2) > 5, q^6+1 != 0, q^8+1 != 0, char != 2" : v.witness);
        return v;
    }
    if (n == 2) {
        v.clause = "a2";
        v.semisimple = c.orderAbove(2);
        if (!v.semisimple) v.witness = "o(q^2) = " + orderText() + " <= 2: [2] = 0";
        v.reasons.push_back(v.semisimple ? "o(q^2) > 2" : v.witness);
        return v;
    }
    v.clause = "a1";
    if (!c.orderAbove(n)) {
        v.semisimple = false;
        v.witness = "o(q^2) = " + orderText() + " <= " + std::to_string(n) + ": [" + orderText() + "] = 0";
        v.reasons.push_back(v.witness);
        return v;
    }
    for (int k = 3; k <= n; ++k) {
        const std::pair<int, long> set[] = {{1, 3 - 2 * k}, {1, 3 - k},  {-1, 3 - k},
                                            {-1, 2 * k - 3}, {1, k - 3}, {-1, k - 3}};
        for (auto [eps, a] : set)
            if (c.rIs(eps, a)) {
                v.semisimple = false;
                v.witness = atomFor(eps, a);
                std::ostringstream os;
                os << "r = " << (eps < 0 ? "-" : "") << "q^" << a << " (k = " << k << ")";
                v.reasons.push_back(os.str());
                return v;
            }
    }
    v.semisimple = true;
    v.reasons.push_back("o(q^2) > n and r avoids the excluded set");
    return v;
}

CrossCheck crossCheckDetail(int n, int eps, int a) {
    FieldSpec spec;
    spec.r = RSpec::powerOfQ(eps, a);
    CrossCheck out;
    out.verdict = decideSemisimple(n, spec);
    if ((eps == 1 && a == -1) || (eps == -1 && a == 1))
        throw std::invalid_argument("cross-check excludes r = q^-1 and r = -q");
    out.determinantsNonzero = true;
    for (int k = 2; k <= n && out.determinantsNonzero; ++k) {
        Partition row{k - 2}, col(k - 2, 1);
        if (k == 2) row.clear();
        for (const Partition& lam : {row, col}) {
            auto g = gramDetRecursive(k, 1, lam);
            if (g.value.substituteR(eps, a).isZero()) {
                out.determinantsNonzero = false;
                out.vanishing = "det G_{1,(" + partitionStr(lam) + ")} at n = " + std::to_string(k);
                break;
            }
        }
    }
    // the Hecke part is semisimple for generic q
    out.agree = out.determinantsNonzero == out.verdict.semisimple;
    return out;
}

bool crossCheckCriterion(int n, const FieldSpec& spec) {
    if (spec.r.kind != RSpec::Kind::PowerOfQ || spec.qOrder || spec.characteristic != 0)
        throw std::invalid_argument("cross-check needs r = +-q^a and generic q over Q");
    return crossCheckDetail(n, spec.r.eps, spec.r.a).agree;
}

}  // namespace bmw

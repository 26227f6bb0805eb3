#pragma once

#include "bmw/ratfn.hpp"

#include <map>
#include <string>

namespace bmw {

enum class AtomKind { RMinus = 0, QuantumInt = 1, QSquareMinusOne = 2, Generic = 3 };

struct Atom {
    AtomKind kind = AtomKind::Generic;
    int eps = 0;       // RMinus: r - eps*q^a
    int a = 0;
    int k = 0;         // QuantumInt
    LaurentPoly poly;  // Generic, primitive normal form
    int cyclo = 0;     // Generic that is the cyclotomic polynomial Phi_m(q), m = cyclo

    static Atom rminus(int eps, int a) { return Atom{AtomKind::RMinus, eps, a, 0, {}, 0}; }
    static Atom qint(int k) { return Atom{AtomKind::QuantumInt, 0, 0, k, {}, 0}; }
    static Atom q2m1() { return Atom{AtomKind::QSquareMinusOne, 0, 0, 0, {}, 0}; }
    // p must already be primitive with min exponents 0 and positive lead
    static Atom generic(const LaurentPoly& p, int cyclo = 0) {
        return Atom{AtomKind::Generic, 0, 0, 0, p, cyclo};
    }

    LaurentPoly expand() const;
    std::string str() const;  // "r-q^3", "[2]", "q^2-1", "q^4-q^2+1"
    bool operator<(const Atom& o) const;
    bool operator==(const Atom& o) const;
};

struct Unit {
    mpq_class coeff = 1;
    int eq = 0;
    int er = 0;
    bool operator==(const Unit& o) const { return coeff == o.coeff && eq == o.eq && er == o.er; }
};

class FactoredValue {
public:
    FactoredValue() = default;  // the value 1
    static FactoredValue zero();
    static FactoredValue fromUnit(const mpq_class& c, int eq = 0, int er = 0);
    static FactoredValue fromAtom(const Atom& a, int e = 1);

    bool isZero() const { return unit_.coeff == 0; }
    const Unit& unit() const { return unit_; }
    const std::map<Atom, int>& factors() const { return f_; }
    int exponentOf(const Atom& a) const;

    FactoredValue& operator*=(const FactoredValue& o);
    friend FactoredValue operator*(FactoredValue a, const FactoredValue& b) { return a *= b; }
    FactoredValue inverse() const;
    friend FactoredValue operator/(const FactoredValue& a, const FactoredValue& b) { return a * b.inverse(); }
    FactoredValue pow(long e) const;
    bool operator==(const FactoredValue& o) const { return unit_ == o.unit_ && f_ == o.f_; }
    bool operator!=(const FactoredValue& o) const { return !(*this == o); }

    RationalFn expand() const;
    // r -> eps*q^a atom by atom; result is a rational function of q alone.
    RationalFn substituteR(int eps, int a) const;

    std::string render() const;
    nlohmann::json toJson() const;
    static FactoredValue fromJson(const nlohmann::json& j);

private:
    void mulAtom(const Atom& a, long e);
    void canonicalizeGenerics();
    Unit unit_;
    std::map<Atom, int> f_;
};

FactoredValue factorize(const RationalFn& v);
// Phi_m(q)
const LaurentPoly& cyclotomicPoly(int m);
int moebius(int n);
FactoredValue factorizePoly(const LaurentPoly& p);

std::string renderUnit(const Unit& u);

}  // namespace bmw

#pragma once

#include "bmw/laurent.hpp"

#include "json.hpp"

#include <string>

namespace bmw {

// Element of Q(q,r) as num/den in lowest terms.  den has minimal exponents 0,
// positive leading coefficient, and integer contents of num, den are coprime.
class RationalFn {
public:
    RationalFn() : num_(0), den_(1) {}
    RationalFn(long c) : num_(c), den_(1) {}
    RationalFn(const LaurentPoly& p) : num_(p), den_(1) {}
    RationalFn(const LaurentPoly& n, const LaurentPoly& d);
    static RationalFn fromRational(const mpq_class& c);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isPolynomial() const { return den_.isOne(); }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }
    bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    RationalFn inverse() const;
    RationalFn pow(int k) const;

    // exact r -> eps*q^a on the reduced fraction; throws "specialization pole"
    RationalFn substituteR(int eps, int a) const;

    std::string str() const;
    nlohmann::json toJson() const;
    static RationalFn fromJson(const nlohmann::json& j);

private:
    struct Raw {};
    RationalFn(LaurentPoly n, LaurentPoly d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
    void fixUnits();
    LaurentPoly num_, den_;
};

// a/b == c/d  iff  a*d - c*b == 0, used as an independent check of normalisation
bool crossEqual(const RationalFn& x, const RationalFn& y);

LaurentPoly quantumInt(int m);
LaurentPoly quantumFactorial(const std::vector<int>& parts);
RationalFn omega();
RationalFn deltaParam();

nlohmann::json polyToJson(const LaurentPoly& p);
LaurentPoly polyFromJson(const nlohmann::json& j);

}  // namespace bmw

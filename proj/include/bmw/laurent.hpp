#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bmw {

struct Term {
    int eq = 0;
    int er = 0;
    mpz_class c;
};

// Element of Z[q^+-1, r^+-1].  Terms are kept sorted by (e_r, e_q) descending,
// no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const mpz_class& c);
    static LaurentPoly monomial(const mpz_class& c, int eq, int er);
    static LaurentPoly q(int e = 1) { return monomial(1, e, 0); }
    static LaurentPoly r(int e = 1) { return monomial(1, 0, e); }
    static LaurentPoly fromTerms(std::vector<Term> ts);

    const std::vector<Term>& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    bool isMonomial() const { return t_.size() == 1; }
    bool isOne() const;
    size_t size() const { return t_.size(); }

    int minQ() const;
    int maxQ() const;
    int minR() const;
    int maxR() const;
    const Term& lead() const { return t_.front(); }

    mpz_class content() const;  // positive gcd of coefficients
    LaurentPoly shift(int dq, int dr) const;
    LaurentPoly scaled(const mpz_class& c) const;
    LaurentPoly divInt(const mpz_class& c) const;  // exact

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;  // arbitrary total order, for map keys

    LaurentPoly pow(unsigned k) const;
    // r -> eps*q^a
    LaurentPoly substituteR(int eps, int a) const;
    // q -> 1/q... not needed; q -> s*q^a with s = +-1
    LaurentPoly substituteQ(int s, int a) const;
    bool dependsOnR() const { return !t_.empty() && (minR() != 0 || maxR() != 0); }

    std::string str() const;

private:
    std::vector<Term> t_;
};

std::string monomialStr(int eq, int er);

// gcd in Z[q,r] of the shifted polynomials: primitive, min exponents 0,
// positive leading coefficient.  Throws on gcd(0,0).
LaurentPoly polyGcd(const LaurentPoly& a, const LaurentPoly& b);
// a / b, exact in the Laurent ring; throws std::domain_error when not exact.
LaurentPoly exactDiv(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a);

// shift to min exponents 0, divide out integer content, make leading coeff positive.
// returns the removed unit pieces through the out params.
LaurentPoly primitiveNormal(const LaurentPoly& a, mpz_class* coeff = nullptr, int* eq = nullptr,
                            int* er = nullptr);

}  // namespace bmw

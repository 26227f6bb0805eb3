#include "bmw/numeric.hpp"

#include <stdexcept>

namespace bmw {

mpq_class toField(const mpq_class& x, const Field& F) {
    if (!F.isPrime()) return x;
    mpz_class p = F.p, n = x.get_num() % p, d = x.get_den() % p, inv;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible in field");
    return mpq_class(mpz_class(n * inv % p));
}

mpq_class fieldInv(const mpq_class& x, const Field& F) {
    if (toField(x, F) == 0) throw std::domain_error("evaluation pole");
    if (!F.isPrime()) return 1 / x;
    return toField(mpq_class(1, 1) / x, F);
}

mpq_class fieldPow(const mpq_class& x, long e, const Field& F) {
    mpq_class b = e < 0 ? fieldInv(x, F) : toField(x, F), r = 1;
    unsigned long k = e < 0 ? -e : e;
    while (k) {
        if (k & 1) r = toField(r * b, F);
        b = toField(b * b, F);
        k >>= 1;
    }
    return r;
}

namespace {
void checkParams(const mpq_class& q0, const mpq_class& r0, const Field& F) {
    if (toField(q0, F) == 0 || toField(r0, F) == 0 || toField(q0 * q0 - 1, F) == 0)
        throw std::domain_error("q, r and q^2-1 must be invertible");
}
}  // namespace

mpq_class evalNumeric(const LaurentPoly& v, const mpq_class& q0, const mpq_class& r0, const Field& F) {
    checkParams(q0, r0, F);
    mpq_class s = 0;
    for (auto& t : v.terms()) s = toField(s + t.c * fieldPow(q0, t.eq, F) * fieldPow(r0, t.er, F), F);
    return s;
}

mpq_class evalNumeric(const RationalFn& v, const mpq_class& q0, const mpq_class& r0, const Field& F) {
    mpq_class d = evalNumeric(v.den(), q0, r0, F);
    if (d == 0) throw std::domain_error("evaluation pole");
    return toField(evalNumeric(v.num(), q0, r0, F) * fieldInv(d, F), F);
}

mpq_class evalNumeric(const FactoredValue& v, const mpq_class& q0, const mpq_class& r0, const Field& F) {
    checkParams(q0, r0, F);
    if (v.isZero()) return 0;
    const Unit& u = v.unit();
    mpq_class num = toField(u.coeff, F) * fieldPow(q0, u.eq, F) * fieldPow(r0, u.er, F);
    mpq_class den = 1;
    bool zero = false;
    for (auto& [a, e] : v.factors()) {
        mpq_class x = evalNumeric(a.expand(), q0, r0, F);
        if (x == 0) {
            if (e < 0) throw std::domain_error("evaluation pole");
            zero = true;
            continue;
        }
        if (e > 0)
            num = toField(num * fieldPow(x, e, F), F);
        else
            den = toField(den * fieldPow(x, -e, F), F);
    }
    if (zero) return 0;
    return toField(num * fieldInv(den, F), F);
}

}  // namespace bmw

#pragma once

#include "bmw/factored.hpp"
#include "bmw/ratfn.hpp"

namespace bmw {

// p == 0 means the rationals, otherwise the prime field F_p (elements are
// returned as integer representatives in [0, p)).
struct Field {
    unsigned long p = 0;
    bool isPrime() const { return p != 0; }
};

mpq_class toField(const mpq_class& x, const Field& F);
mpq_class fieldInv(const mpq_class& x, const Field& F);
mpq_class fieldPow(const mpq_class& x, long e, const Field& F);

mpq_class evalNumeric(const LaurentPoly& v, const mpq_class& q0, const mpq_class& r0, const Field& F);
// throws "evaluation pole" if the denominator vanishes
mpq_class evalNumeric(const RationalFn& v, const mpq_class& q0, const mpq_class& r0, const Field& F);
mpq_class evalNumeric(const FactoredValue& v, const mpq_class& q0, const mpq_class& r0, const Field& F);

}  // namespace bmw

#pragma once

#include "bmw/combinatorics.hpp"
#include "bmw/factored.hpp"
#include "bmw/ratfn.hpp"

namespace bmw {

RationalFn contentValue(const Content& c);
// content of the step from -> to as a monomial
Content stepContent(const Partition& from, const Partition& to);

// E_tt(k) for t_{k-1} = t_{k+1}; throws std::invalid_argument otherwise
RationalFn eTT(const Tableau& t, int k);
// the same value, from the local data nu = t_{k-1} = t_{k+1} and mu = t_k
RationalFn eLocal(const Partition& nu, const Partition& mu);

// branch (f, lambda minus p) -> (f, lambda); p removable in lambda
RationalFn gammaAdd(const Partition& lambda, const Node& p);
// branch (f-1, mu) -> (f, lambda) with mu = lambda plus one box
RationalFn gammaRemove(const Partition& lambda, const Partition& mu);
// gamma for the edge from -> to, memoised by shape pair (thread safe)
const RationalFn& gammaStep(const Partition& to, const Partition& from);
const FactoredValue& gammaStepFactored(const Partition& to, const Partition& from);

RationalFn normOf(const Tableau& t);

struct GramDeterminant {
    int n = 0;
    CellLabel cell;
    mpz_class dim;
    FactoredValue value;
};

GramDeterminant gramDetDirect(int n, int f, const Partition& lambda);
GramDeterminant gramDetRecursive(int n, int f, const Partition& lambda);

// preload the recursion memo, e.g. from an on-disk cache
void seedDeterminant(const CellLabel& cell, const FactoredValue& value);
void clearGramMemo();

// ratio normOf(t s_k) / normOf(t) predicted from the two contents
RationalFn normStepCheck(const Tableau& t, int k);

bool dualFactorCheck(int n, int f, const Partition& lambda);
// RMinus atoms (eps, a) with positive exponent
std::vector<std::pair<int, int>> detFactorsScan(int n, int f, const Partition& lambda);

// expanded value lies in Z[r^+-1, q^+-1, (q^2-1)^-1]
bool isIntegral(const FactoredValue& v);

// closed form of det G_{1,(n-2)}
FactoredValue closedFormLine(int n);

}  // namespace bmw

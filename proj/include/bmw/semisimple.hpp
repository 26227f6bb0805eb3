#pragma once

#include "bmw/combinatorics.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>

namespace bmw {

struct RSpec {
    enum class Kind { Generic, PowerOfQ, Numeric } kind = Kind::Generic;
    int eps = 1;  // PowerOfQ: r = eps*q^a
    int a = 0;
    mpq_class q0, r0;  // Numeric
    static RSpec generic() { return {}; }
    static RSpec powerOfQ(int eps, int a);
    static RSpec numeric(const mpq_class& q0, const mpq_class& r0);
    std::string str() const;
};

// qOrder = o(q^2), nullopt for infinite.  When o(q^2) = m is finite we take
// q^m = -1, i.e. q has order 2m (char 2 aside).  For Numeric r the order is
// computed from q0 and a conflicting qOrder is rejected.
struct FieldSpec {
    unsigned long characteristic = 0;
    std::optional<long> qOrder;
    RSpec r;
};

// throws std::invalid_argument for an impossible field description (q^2 = 1, r = 0, p | o(q^2), ...)
void validate(const FieldSpec& spec);

struct Verdict {
    bool semisimple = false;
    std::string clause;   // a1, a2, a3, b1, b2, b3, b4
    std::vector<std::string> reasons;
    std::string witness;  // a vanishing factor when not semisimple
};

Verdict decideSemisimple(int n, const FieldSpec& spec);

struct CrossCheck {
    bool agree = false;
    bool determinantsNonzero = false;
    Verdict verdict;
    std::string vanishing;  // first vanishing determinant, if any
};
// r = eps*q^a with q generic; r must not be q^-1 or -q
CrossCheck crossCheckDetail(int n, int eps, int a);
bool crossCheckCriterion(int n, const FieldSpec& spec);

}  // namespace bmw

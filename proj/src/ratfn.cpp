#include "bmw/ratfn.hpp"

#include <stdexcept>

namespace bmw {

void RationalFn::fixUnits() {
    if (num_.isZero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.isZero()) throw std::domain_error("zero denominator");
    mpz_class c;
    int eq, er;
    LaurentPoly d = primitiveNormal(den_, &c, &eq, &er);
    // num/den = num / (c q^eq r^er d)
    num_ = num_.shift(-eq, -er);
    mpz_class nc = num_.content(), g;
    mpz_gcd(g.get_mpz_t(), nc.get_mpz_t(), c.get_mpz_t());
    if (c < 0) g = -g;
    num_ = num_.divInt(g);
    mpz_class rest;
    mpz_divexact(rest.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    den_ = d.scaled(rest);
}

RationalFn::RationalFn(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (d.isZero()) throw std::domain_error("zero denominator");
    if (!num_.isZero() && !den_.isMonomial()) {
        LaurentPoly g = polyGcd(num_, den_);
        if (!g.isOne()) {
            num_ = exactDiv(num_, g);
            den_ = exactDiv(den_, g);
        }
    }
    fixUnits();
}

RationalFn RationalFn::fromRational(const mpq_class& c) {
    return RationalFn(LaurentPoly(c.get_num()), LaurentPoly(c.get_den()));
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, Raw{}); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.isZero() || b.isZero()) return RationalFn();
    LaurentPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!an.isMonomial() && !bd.isMonomial()) {
        LaurentPoly g = polyGcd(an, bd);
        if (!g.isOne()) {
            an = exactDiv(an, g);
            bd = exactDiv(bd, g);
        }
    }
    if (!bn.isMonomial() && !ad.isMonomial()) {
        LaurentPoly g = polyGcd(bn, ad);
        if (!g.isOne()) {
            bn = exactDiv(bn, g);
            ad = exactDiv(ad, g);
        }
    }
    RationalFn out(an * bn, ad * bd, RationalFn::Raw{});
    out.fixUnits();
    return out;
}

RationalFn RationalFn::inverse() const {
    if (isZero()) throw std::domain_error("division by zero");
    RationalFn out(den_, num_, Raw{});
    out.fixUnits();
    return out;
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    LaurentPoly g = polyGcd(a.den_, b.den_);
    LaurentPoly da = exactDiv(a.den_, g), db = exactDiv(b.den_, g);
    LaurentPoly n = a.num_ * db + b.num_ * da;
    if (n.isZero()) return RationalFn();
    // only factors of g can cancel
    LaurentPoly h = g.isOne() ? g : polyGcd(n, g);
    if (!h.isOne()) {
        n = exactDiv(n, h);
        g = exactDiv(g, h);
    }
    RationalFn out(n, da * db * g, RationalFn::Raw{});
    out.fixUnits();
    return out;
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn RationalFn::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    return RationalFn(num_.pow(k), den_.pow(k), Raw{});
}

RationalFn RationalFn::substituteR(int eps, int a) const {
    LaurentPoly d = den_.substituteR(eps, a);
    if (d.isZero()) throw std::domain_error("specialization pole");
    return RationalFn(num_.substituteR(eps, a), d);
}

std::string RationalFn::str() const {
    if (den_.isOne()) return num_.str();
    std::string n = num_.isMonomial() ? num_.str() : "(" + num_.str() + ")";
    return n + "/(" + den_.str() + ")";
}

nlohmann::json polyToJson(const LaurentPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& t : p.terms()) {
        if (t.c.fits_slong_p())
            a.push_back({t.c.get_si(), t.eq, t.er});
        else
            a.push_back({t.c.get_str(), t.eq, t.er});
    }
    return a;
}

LaurentPoly polyFromJson(const nlohmann::json& j) {
    std::vector<Term> v;
    for (auto& e : j) {
        mpz_class c;
        if (e[0].is_string())
            c = mpz_class(e[0].get<std::string>());
        else
            c = mpz_class(e[0].get<long>());
        v.push_back(Term{e[1].get<int>(), e[2].get<int>(), c});
    }
    return LaurentPoly::fromTerms(std::move(v));
}

nlohmann::json RationalFn::toJson() const { return {{"num", polyToJson(num_)}, {"den", polyToJson(den_)}}; }

RationalFn RationalFn::fromJson(const nlohmann::json& j) {
    return RationalFn(polyFromJson(j.at("num")), polyFromJson(j.at("den")));
}

bool crossEqual(const RationalFn& x, const RationalFn& y) {
    return (x.num() * y.den() - y.num() * x.den()).isZero();
}

LaurentPoly quantumInt(int m) {
    if (m == 0) return LaurentPoly();
    if (m < 0) return -(LaurentPoly::q(2 * m) * quantumInt(-m));
    std::vector<Term> v;
    for (int j = 0; j < m; ++j) v.push_back(Term{2 * j, 0, 1});
    return LaurentPoly::fromTerms(std::move(v));
}

LaurentPoly quantumFactorial(const std::vector<int>& parts) {
    LaurentPoly out(1);
    for (int p : parts)
        for (int j = 2; j <= p; ++j) out = out * quantumInt(j);
    return out;
}

RationalFn omega() { return RationalFn(LaurentPoly::q(2) - LaurentPoly(1), LaurentPoly::q(1)); }

RationalFn deltaParam() {
    LaurentPoly q = LaurentPoly::q(), r = LaurentPoly::r();
    return RationalFn((q + r) * (q * r - LaurentPoly(1)), r * (q * q - LaurentPoly(1)));
}

}  // namespace bmw

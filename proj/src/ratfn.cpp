#include "qfock/ratfn.hpp"

namespace qfock {

RatFn::RatFn(const Laurent& n, const Laurent& d) : num_(n), den_(d) {
    if (den_.zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.zero()) {
        den_ = Laurent(1);
        return;
    }
    Laurent g = lgcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    // Unit normalization: push the q-power and the leading rational of the
    // denominator into the numerator.
    long shift = den_.lo();
    Rat lead = den_.at(den_.hi());
    den_ = divexact(den_, Laurent::term(lead, shift));
    num_ = divexact(num_, Laurent::term(lead, shift));
}

RatFn& RatFn::operator+=(const RatFn& o) {
    *this = RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) {
    *this = RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFn& RatFn::operator*=(const RatFn& o) {
    *this = RatFn(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
    if (o.zero()) throw std::domain_error("division by zero rational function");
    *this = RatFn(num_ * o.den_, den_ * o.num_);
    return *this;
}

RatFn RatFn::operator-() const {
    RatFn r(*this);
    r.num_ = -r.num_;
    return r;
}

Rat RatFn::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("denominator vanishes at specialization point");
    return num_.eval(x) / d;
}

long RatFn::qval() const {
    if (zero()) throw std::domain_error("qval() of zero");
    return num_.lo();
}

std::string RatFn::str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + " / " + den_.str();
}

}  // namespace qfock

#pragma once

#include "qfock/laurent.hpp"

namespace qfock {

// Rational function num/den in q, kept in a canonical form: the fraction is
// reduced, the denominator has lowest exponent 0 and highest-exponent
// coefficient 1. Zero is 0/1. Equality is therefore structural.
class RatFn {
public:
    RatFn() : num_(), den_(1) {}
    RatFn(long v) : num_(v), den_(1) {}
    RatFn(const Rat& v) : num_(v), den_(1) {}
    RatFn(const Laurent& n) : num_(n), den_(1) {}
    RatFn(const Laurent& n, const Laurent& d);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool zero() const { return num_.zero(); }
    bool is_poly() const { return den_.is_one(); }

    RatFn& operator+=(const RatFn& o);
    RatFn& operator-=(const RatFn& o);
    RatFn& operator*=(const RatFn& o);
    RatFn& operator/=(const RatFn& o);
    RatFn operator-() const;

    friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
    friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
    friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
    friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }

    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    // Substitutes q = x; throws if the denominator vanishes there.
    Rat eval(const Rat& x) const;

    // Order of vanishing at q = 0: lo() of the numerator (the canonical
    // denominator has a unit constant term). Throws on the zero function.
    long qval() const;

    // "num" when the denominator is 1, otherwise "num / den".
    std::string str() const;

private:
    Laurent num_, den_;
};

}  // namespace qfock

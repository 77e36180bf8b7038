#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace qfock {

using Rat = mpq_class;

// Makes a canonical rational num/den (lowest terms, positive denominator).
Rat ratq(long num, long den);

// Sparse Laurent polynomial in one variable q with rational coefficients.
// Invariant: no zero coefficient is ever stored, so equality of the term
// maps is equality of polynomials.
class Laurent {
public:
    Laurent() = default;
    Laurent(long v);
    Laurent(const Rat& v);

    // c * q^e
    static Laurent term(const Rat& c, long e);
    // q^e
    static Laurent qpow(long e);

    bool zero() const { return c_.empty(); }
    bool is_one() const;

    // Exponent range; both require a nonzero polynomial.
    long lo() const;
    long hi() const;

    Rat at(long e) const;
    const std::map<long, Rat>& terms() const { return c_; }
    std::size_t size() const { return c_.size(); }

    void add_term(long e, const Rat& c);

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent operator-() const;

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);

    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return c_ != o.c_; }
    // Arbitrary total order, used only for container keys.
    bool operator<(const Laurent& o) const { return c_ < o.c_; }

    // Substitutes a rational value for q. Negative exponents require x != 0.
    Rat eval(const Rat& x) const;
    // Classical specialization q = 1: the coefficient sum.
    Rat eval_q1() const;

    // Canonical text: terms in ascending exponent joined by " + ",
    // e.g. "-1*q^-2 + 3 + 1/2*q^4". Zero renders as "0".
    std::string str() const;

private:
    std::map<long, Rat> c_;
};

// Exact division in the Laurent ring; throws std::domain_error when the
// quotient does not exist or b is zero.
Laurent divexact(const Laurent& a, const Laurent& b);

// Greatest common divisor of the polynomial parts after factoring out the
// lowest power of q, normalized to lowest exponent 0 and leading
// (highest-exponent) coefficient 1. lgcd(0, 0) = 0.
Laurent lgcd(const Laurent& a, const Laurent& b);

}  // namespace qfock

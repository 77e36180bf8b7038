#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qfock/fock.hpp"
#include "qfock/uq.hpp"

namespace qfock {

// Syntax error; pos is the byte offset of the offending character.
struct parse_error : std::invalid_argument {
    std::size_t pos;
    parse_error(const std::string& msg, std::size_t at);
};

// One basis wedge as text: u(m1)^...^u(mk)^vac(c). The tail marker names the
// first implicit index, so c = charge - k and the bare vacuum is vac(charge).
std::string wedge_str(const std::vector<long>& head, long charge);

// Canonical text of a vector: terms in canonical head order joined by " + ",
// each "(coeff)*" wedge with the unit coefficient omitted; the zero vector
// renders as "(0)*vac(charge)".
std::string fock_str(const FockVec& v);

// Operator expression tree. A sum owns scaled products; a product applies
// its rightmost factor first. Omega(j,b) prepends u_{j-nb}, raising the
// charge by one.
struct OpExpr {
    enum class Kind { gen, bop, omega, sum };

    struct Term {
        Laurent coeff;
        std::vector<OpExpr> factors;
    };

    Kind kind = Kind::sum;
    Gen gen{GenKind::D, 0};   // kind == gen
    long a = 0;               // kind == bop
    int j = 1;                // kind == omega
    long b = 0;               // kind == omega
    std::vector<Term> terms;  // kind == sum
};

// Laurent literal in the canonical text form, e.g. "-1*q^-2 + 3 + 1/2*q^4":
//   laurent := mono (('+'|'-') mono)*
//   mono    := rat ['*' qp] | qp      qp := 'q' ['^' int]    rat := int ['/' int]
Laurent parse_laurent(const std::string& src);

// Vector expressions:
//   vec  := term (('+'|'-') term)*
//   term := ['(' laurent ')' '*'] wedge
//   wedge := ('u(' int ')' '^')* 'vac(' int ')'
// Any word is accepted and straightened; summands must share the charge
// (semantic_error otherwise). parse_vec(fock_str(v)) == v.
FockVec parse_vec(const std::string& src, int n);

// Operator expressions:
//   op     := term (('+'|'-') term)*
//   term   := [scalar '*'] factor ('*' factor)*
//   factor := atom | '(' op ')'
//   atom   := E(i) | F(i) | K(i) | Kinv(i) | D | B(a) | Omega(j,b)
//   scalar := '(' laurent ')' | mono
// After '(' a Laurent literal is tried first, then a subexpression.
// Generator indices are validated against n at parse time.
OpExpr parse_op(const std::string& src, int n);

FockVec apply_op(const OpExpr& e, const FockVec& v);

}  // namespace qfock

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "qfock/expr.hpp"
#include "qfock/heis.hpp"

using namespace qfock;

namespace {

Laurent q(long e) { return Laurent::qpow(e); }

FockVec wedge(int n, long charge, const std::vector<long>& head, Laurent c = Laurent(1)) {
    return c * basis_wedge(n, charge, head);
}

std::size_t error_pos(const std::string& src, int n, bool op) {
    try {
        if (op)
            parse_op(src, n);
        else
            parse_vec(src, n);
    } catch (const parse_error& e) {
        return e.pos;
    }
    return static_cast<std::size_t>(-1);
}

// Parsing may reject, complain semantically, or trip the rewrite cap on
// adversarial words, but must never leak another exception type.
bool parses_safely(const std::string& src, int n) {
    try {
        parse_vec(src, n);
    } catch (const parse_error&) {
    } catch (const semantic_error&) {
    } catch (const std::runtime_error&) {
    }
    try {
        parse_op(src, n);
    } catch (const parse_error&) {
    }
    return true;
}

}  // namespace

TEST_CASE("coefficient text round trips") {
    Laurent c = Laurent::term(Rat(-1), -2) + Laurent(3) + Laurent::term(ratq(1, 2), 4);
    CHECK(c.str() == "-1*q^-2 + 3 + 1/2*q^4");
    CHECK(parse_laurent(c.str()) == c);

    CHECK((Laurent(1) + q(2)).str() == "1 + q^2");
    CHECK((-q(1)).str() == "-1*q");
    CHECK(Laurent().str() == "0");
    for (const char* s : {"-1*q^-2 + 3 + 1/2*q^4", "1 + q^2", "-1*q", "0", "q", "q^-3", "2/3"})
        CHECK(parse_laurent(std::string(s)).str() == s);

    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        Laurent r;
        int terms = static_cast<int>(rng.range(0, 4));
        for (int k = 0; k < terms; ++k)
            r += Laurent::term(ratq(rng.range(-9, 9), rng.range(1, 5)), rng.range(-6, 6));
        CHECK(parse_laurent(r.str()) == r);
    }

    CHECK_THROWS_AS(parse_laurent("q +"), parse_error);
    CHECK_THROWS_AS(parse_laurent("1/0"), parse_error);
    CHECK_THROWS_AS(parse_laurent("x"), parse_error);
}

TEST_CASE("vector rendering") {
    CHECK(fock_str(vacuum(2, 0)) == "vac(0)");
    CHECK(fock_str(vacuum(2, -3)) == "vac(-3)");
    CHECK(fock_str(fock_zero(2, 1)) == "(0)*vac(1)");
    CHECK(fock_str(wedge(2, 0, {2})) == "u(2)^vac(-1)");
    CHECK(fock_str(wedge(2, 0, {2}) + wedge(2, 0, {1, 0}, -q(1))) ==
          "u(2)^vac(-1) + (-1*q)*u(1)^u(0)^vac(-2)");
    CHECK(fock_str(wedge(3, 1, {4, 2}, Laurent(1) + q(2))) == "(1 + q^2)*u(4)^u(2)^vac(-1)");
}

TEST_CASE("wedge literals parse, straighten, and round trip") {
    CHECK(parse_vec("vac(0)", 2) == vacuum(2, 0));
    CHECK(parse_vec("u(2)^u(1)^vac(-1)", 2) == wedge(2, 1, {2, 1}));
    CHECK(parse_vec("u(0)^u(3)^vac(-2)", 2) ==
          wedge(2, 0, {3, 0}, -q(1)) + wedge(2, 0, {2, 1}, q(2) - Laurent(1)));
    CHECK(parse_vec("u(1)^u(1)^vac(-2)", 2) == fock_zero(2, 0));
    CHECK(parse_vec("(q^2)*vac(0) - (q^2 + -1*q^4)*vac(0)", 3) == wedge(3, 0, {}, q(4)));
    CHECK(parse_vec(" u( 2 ) ^ u( 1 ) ^ vac( -1 ) ", 2) == wedge(2, 1, {2, 1}));
    CHECK(parse_vec("(0)*vac(4)", 2) == fock_zero(2, 4));

    Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        int n = rng.flip() ? 2 : 3;
        FockVec v = random_fock(rng, n, rng.range(-2, 2));
        CHECK(parse_vec(fock_str(v), n) == v);
    }
}

TEST_CASE("vector grammar rejections carry positions") {
    CHECK(error_pos("", 2, false) == 0);
    CHECK(error_pos("2*vac(0)", 2, false) == 0);
    CHECK(error_pos("u(2)", 2, false) == 4);
    CHECK(error_pos("u(2)^", 2, false) == 5);
    CHECK(error_pos("u(a)^vac(0)", 2, false) == 2);
    CHECK(error_pos("vac(0) junk", 2, false) == 7);
    CHECK_THROWS_AS(parse_vec("(q", 2), parse_error);
    CHECK_THROWS_AS(parse_vec("vac(0) + vac(1)", 2), semantic_error);
    CHECK_THROWS_AS(parse_vec("vac(0)", 1), std::invalid_argument);
}

TEST_CASE("operator expressions evaluate rightmost first") {
    FockVec vac0 = vacuum(2, 0);
    Gen f0{GenKind::F, 0}, f1{GenKind::F, 1};

    OpExpr e = parse_op("F(0)*F(1) - q*F(1)*F(0)", 2);
    FockVec v = apply_op(e, vac0);
    CHECK(v == act_word({f0, f1}, vac0) - q(1) * act_word({f1, f0}, vac0));
    CHECK(v == wedge(2, 0, {2}, -q(1)) - wedge(2, 0, {1, 0}));

    CHECK(apply_op(parse_op("B(-1)", 2), vac0) == bop(-1, vac0));
    CHECK(apply_op(parse_op("K(0)*Kinv(0)", 3), vacuum(3, 1)) == vacuum(3, 1));
    CHECK(apply_op(parse_op("D", 2), wedge(2, 0, {1, 0})) ==
          wedge(2, 0, {1, 0}, Laurent(-1)));

    // Scalars distribute over parenthesized sums; composition nests.
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        FockVec w = random_fock(rng, 2, 0);
        CHECK(apply_op(parse_op("(3*F(0))*F(1)", 2), w) ==
              Laurent(3) * act_word({f0, f1}, w));
        CHECK(apply_op(parse_op("(1 + q^2)*(E(0)*F(0) - F(0)*E(0))", 2), w) ==
              (Laurent(1) + q(2)) *
                  (act_word({{GenKind::E, 0}, f0}, w) - act_word({f0, {GenKind::E, 0}}, w)));
    }
}

TEST_CASE("the prepending atom raises the charge") {
    CHECK(apply_op(parse_op("Omega(1,0)", 2), vacuum(2, 0)) == vacuum(2, 1));
    CHECK(apply_op(parse_op("Omega(2,-1)", 2), vacuum(2, 0)) == wedge(2, 1, {4}));
    CHECK(apply_op(parse_op("Omega(2,0)", 3), vacuum(3, 1)) == vacuum(3, 2));
    CHECK(apply_op(parse_op("Omega(1,-1)", 3), vacuum(3, 1)) == wedge(3, 2, {4}));

    // u_a twice in a row dies.
    CHECK(apply_op(parse_op("Omega(1,0)*Omega(1,0)", 2), vacuum(2, -1)).zero());

    // Mixing charges inside one sum is a semantic error at application time.
    OpExpr mixed = parse_op("E(0) + Omega(1,0)", 2);
    CHECK_THROWS_AS(apply_op(mixed, vacuum(2, 0)), semantic_error);
}

TEST_CASE("operator grammar rejections carry positions") {
    CHECK(error_pos("E(2)", 2, true) == 2);
    CHECK(error_pos("E(5)", 2, true) == 2);
    CHECK(error_pos("F(-1)", 3, true) == 2);
    CHECK(error_pos("B(0)", 2, true) == 2);
    CHECK(error_pos("Omega(0,1)", 2, true) == 6);
    CHECK(error_pos("Omega(3,1)", 2, true) == 6);
    CHECK(error_pos("Q(1)", 2, true) == 0);
    CHECK(error_pos("", 2, true) == 0);
    CHECK(error_pos("E(0)**F(0)", 2, true) == 5);
    CHECK(error_pos("E(0)*", 2, true) == 5);
    CHECK(error_pos("q", 2, true) == 1);
    CHECK(error_pos("E(0) F(1)", 2, true) == 5);
    CHECK_THROWS_AS(parse_op("(q^2)", 2), parse_error);
    CHECK_THROWS_AS(parse_op("D(1)", 2), parse_error);
}

TEST_CASE("mutated inputs never crash the parsers") {
    const std::vector<std::string> seeds = {
        "u(2)^u(1)^vac(-1)",
        "(1 + q^2)*u(0)^u(3)^vac(-2) - (q)*vac(0)",
        "F(0)*F(1) - q*F(1)*F(0)",
        "(1/2*q^-3)*B(-2)*Omega(1,0)*D",
        "K(0)*Kinv(0) + (q^2)*E(1)*F(1)",
    };
    const std::string alphabet = "uvacEFKBDOq^*()+-,0123456789 /";
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        std::string s = seeds[static_cast<std::size_t>(rng.range(0, 4))];
        int edits = static_cast<int>(rng.range(1, 3));
        for (int k = 0; k < edits && !s.empty(); ++k) {
            auto at = static_cast<std::size_t>(rng.range(0, static_cast<long>(s.size()) - 1));
            s[at] = alphabet[static_cast<std::size_t>(
                rng.range(0, static_cast<long>(alphabet.size()) - 1))];
        }
        CHECK(parses_safely(s, 2));
    }
}

#include "qfock/expr.hpp"

#include <cctype>
#include <utility>

#include "qfock/heis.hpp"

namespace qfock {

parse_error::parse_error(const std::string& msg, std::size_t at)
    : std::invalid_argument(msg + " at position " + std::to_string(at)), pos(at) {}

std::string wedge_str(const std::vector<long>& head, long charge) {
    std::string s;
    for (long m : head) {
        s += "u(";
        s += std::to_string(m);
        s += ")^";
    }
    s += "vac(";
    s += std::to_string(charge - static_cast<long>(head.size()));
    s += ")";
    return s;
}

std::string fock_str(const FockVec& v) {
    if (v.zero()) return "(0)*vac(" + std::to_string(v.charge) + ")";
    std::string s;
    for (const auto& [head, c] : v.terms) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += "(" + c.str() + ")*";
        s += wedge_str(head, v.charge);
    }
    return s;
}

namespace {

struct Cursor {
    const std::string& src;
    std::size_t pos = 0;

    void skip() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool take(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const std::string& ctx) {
        if (!take(c)) fail(std::string("expected '") + c + "' " + ctx);
    }
    bool done() {
        skip();
        return pos == src.size();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }
};

std::string read_ident(Cursor& c) {
    c.skip();
    std::size_t start = c.pos;
    while (c.pos < c.src.size() && std::isalpha(static_cast<unsigned char>(c.src[c.pos]))) ++c.pos;
    return c.src.substr(start, c.pos - start);
}

long parse_int(Cursor& c) {
    c.skip();
    std::size_t start = c.pos;
    if (c.pos < c.src.size() && c.src[c.pos] == '-') ++c.pos;
    std::size_t digits = c.pos;
    while (c.pos < c.src.size() && std::isdigit(static_cast<unsigned char>(c.src[c.pos]))) ++c.pos;
    if (c.pos == digits) {
        c.pos = start;
        c.fail("expected an integer");
    }
    try {
        return std::stol(c.src.substr(start, c.pos - start));
    } catch (const std::out_of_range&) {
        c.pos = start;
        c.fail("integer out of range");
    }
}

Rat parse_rat(Cursor& c) {
    long num = parse_int(c);
    std::size_t save = c.pos;
    if (c.take('/')) {
        c.skip();
        if (c.pos < c.src.size() && std::isdigit(static_cast<unsigned char>(c.src[c.pos]))) {
            long den = parse_int(c);
            if (den == 0) c.fail("zero denominator");
            return ratq(num, den);
        }
        c.pos = save;
    }
    return Rat(num);
}

long parse_qexp(Cursor& c) {
    // The 'q' itself is already consumed.
    if (c.take('^')) return parse_int(c);
    return 1;
}

Laurent parse_mono(Cursor& c) {
    if (c.peek() == 'q') {
        ++c.pos;
        return Laurent::qpow(parse_qexp(c));
    }
    Rat r = parse_rat(c);
    // A '*' joins the monomial only when a q power follows; otherwise it
    // separates the scalar from an operator factor and stays unread.
    std::size_t save = c.pos;
    if (c.take('*')) {
        if (c.peek() == 'q') {
            ++c.pos;
            return Laurent::term(r, parse_qexp(c));
        }
        c.pos = save;
    }
    return Laurent(r);
}

Laurent parse_laurent_body(Cursor& c) {
    Laurent out = parse_mono(c);
    for (;;) {
        char ch = c.peek();
        if (ch == '+') {
            ++c.pos;
            out += parse_mono(c);
        } else if (ch == '-') {
            ++c.pos;
            out -= parse_mono(c);
        } else {
            break;
        }
    }
    return out;
}

FockVec parse_vec_term(Cursor& c, int n) {
    Laurent coeff(1);
    if (c.peek() == '(') {
        ++c.pos;
        coeff = parse_laurent_body(c);
        c.expect(')', "after a coefficient");
        c.expect('*', "after a coefficient");
    }
    std::vector<long> word;
    for (;;) {
        c.skip();
        std::size_t at = c.pos;
        std::string id = read_ident(c);
        if (id == "u") {
            c.expect('(', "after 'u'");
            word.push_back(parse_int(c));
            c.expect(')', "after a wedge index");
            c.expect('^', "between wedge factors");
        } else if (id == "vac") {
            c.expect('(', "after 'vac'");
            long tail = parse_int(c);
            c.expect(')', "after the tail index");
            long charge = tail + static_cast<long>(word.size());
            return coeff * straighten(word, charge, n);
        } else {
            throw parse_error("expected 'u' or 'vac'", at);
        }
    }
}

OpExpr parse_op_sum(Cursor& c, int n);

OpExpr parse_atom(Cursor& c, int n) {
    c.skip();
    std::size_t at = c.pos;
    std::string id = read_ident(c);
    OpExpr e;
    if (id == "D") {
        e.kind = OpExpr::Kind::gen;
        e.gen = Gen{GenKind::D, 0};
        return e;
    }
    if (id == "E" || id == "F" || id == "K" || id == "Kinv") {
        c.expect('(', "after a generator name");
        c.skip();
        std::size_t ip = c.pos;
        long i = parse_int(c);
        c.expect(')', "after a generator index");
        if (i < 0 || i >= n) throw parse_error("generator index out of range", ip);
        GenKind k = id == "E"   ? GenKind::E
                    : id == "F" ? GenKind::F
                    : id == "K" ? GenKind::K
                                : GenKind::Kinv;
        e.kind = OpExpr::Kind::gen;
        e.gen = Gen{k, static_cast<int>(i)};
        return e;
    }
    if (id == "B") {
        c.expect('(', "after 'B'");
        c.skip();
        std::size_t ip = c.pos;
        long a = parse_int(c);
        c.expect(')', "after the mode index");
        if (a == 0) throw parse_error("mode must be nonzero", ip);
        e.kind = OpExpr::Kind::bop;
        e.a = a;
        return e;
    }
    if (id == "Omega") {
        c.expect('(', "after 'Omega'");
        c.skip();
        std::size_t ip = c.pos;
        long j = parse_int(c);
        c.expect(',', "between Omega arguments");
        long b = parse_int(c);
        c.expect(')', "after Omega arguments");
        if (j < 1 || j > n) throw parse_error("component index out of range", ip);
        e.kind = OpExpr::Kind::omega;
        e.j = static_cast<int>(j);
        e.b = b;
        return e;
    }
    throw parse_error(id.empty() ? "expected an operator" : "unknown operator '" + id + "'", at);
}

OpExpr parse_factor(Cursor& c, int n) {
    if (c.peek() == '(') {
        ++c.pos;
        OpExpr e = parse_op_sum(c, n);
        c.expect(')', "after a subexpression");
        return e;
    }
    return parse_atom(c, n);
}

OpExpr::Term parse_op_term(Cursor& c, int n) {
    OpExpr::Term t;
    t.coeff = Laurent(1);
    char ch = c.peek();
    if (ch == '(') {
        // A parenthesized Laurent scalar, or a parenthesized subexpression;
        // try the scalar reading first and back off on failure.
        std::size_t save = c.pos;
        try {
            ++c.pos;
            Laurent s = parse_laurent_body(c);
            c.expect(')', "after a coefficient");
            c.expect('*', "after a coefficient");
            t.coeff = s;
        } catch (const parse_error&) {
            c.pos = save;
        }
    } else if (ch == 'q' || std::isdigit(static_cast<unsigned char>(ch))) {
        t.coeff = parse_mono(c);
        c.expect('*', "after a coefficient");
    }
    t.factors.push_back(parse_factor(c, n));
    while (c.take('*')) t.factors.push_back(parse_factor(c, n));
    return t;
}

OpExpr parse_op_sum(Cursor& c, int n) {
    OpExpr e;
    e.terms.push_back(parse_op_term(c, n));
    for (;;) {
        char ch = c.peek();
        if (ch == '+') {
            ++c.pos;
            e.terms.push_back(parse_op_term(c, n));
        } else if (ch == '-') {
            ++c.pos;
            OpExpr::Term t = parse_op_term(c, n);
            t.coeff = -t.coeff;
            e.terms.push_back(std::move(t));
        } else {
            break;
        }
    }
    return e;
}

}  // namespace

Laurent parse_laurent(const std::string& src) {
    Cursor c{src};
    Laurent out = parse_laurent_body(c);
    if (!c.done()) c.fail("unexpected trailing input");
    return out;
}

FockVec parse_vec(const std::string& src, int n) {
    check_rank(n);
    Cursor c{src};
    FockVec out = parse_vec_term(c, n);
    for (;;) {
        char ch = c.peek();
        if (ch == '+') {
            ++c.pos;
            out += parse_vec_term(c, n);
        } else if (ch == '-') {
            ++c.pos;
            out -= parse_vec_term(c, n);
        } else {
            break;
        }
    }
    if (!c.done()) c.fail("unexpected trailing input");
    return out;
}

OpExpr parse_op(const std::string& src, int n) {
    check_rank(n);
    Cursor c{src};
    OpExpr e = parse_op_sum(c, n);
    if (!c.done()) c.fail("unexpected trailing input");
    return e;
}

FockVec apply_op(const OpExpr& e, const FockVec& v) {
    switch (e.kind) {
        case OpExpr::Kind::gen:
            return act(e.gen, v);
        case OpExpr::Kind::bop:
            return bop(e.a, v);
        case OpExpr::Kind::omega:
            return wedge_prepend(static_cast<long>(e.j) - static_cast<long>(v.n) * e.b, v);
        case OpExpr::Kind::sum:
            break;
    }
    FockVec out = fock_zero(v.n, v.charge);
    bool first = true;
    for (const auto& t : e.terms) {
        FockVec w = v;
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) w = apply_op(*it, w);
        w = t.coeff * w;
        if (first) {
            out = std::move(w);
            first = false;
        } else {
            out += w;
        }
    }
    return out;
}

}  // namespace qfock

#include "qfock/laurent.hpp"

#include <sstream>
#include <vector>

namespace qfock {

Rat ratq(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Laurent::Laurent(long v) {
    if (v != 0) c_[0] = Rat(v);
}

Laurent::Laurent(const Rat& v) {
    if (v != 0) c_[0] = v;
}

Laurent Laurent::term(const Rat& c, long e) {
    Laurent p;
    if (c != 0) p.c_[e] = c;
    return p;
}

Laurent Laurent::qpow(long e) { return term(Rat(1), e); }

bool Laurent::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

long Laurent::lo() const {
    if (c_.empty()) throw std::domain_error("lo() of zero polynomial");
    return c_.begin()->first;
}

long Laurent::hi() const {
    if (c_.empty()) throw std::domain_error("hi() of zero polynomial");
    return c_.rbegin()->first;
}

Rat Laurent::at(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

void Laurent::add_term(long e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = c_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

Rat Laurent::eval(const Rat& x) const {
    Rat acc(0);
    for (const auto& [e, c] : c_) {
        if (e < 0 && x == 0) throw std::domain_error("negative exponent at q = 0");
        Rat p(1);
        long k = e < 0 ? -e : e;
        Rat base = x;
        if (e < 0) base = Rat(1) / x;
        for (long t = 0; t < k; ++t) p *= base;
        acc += c * p;
    }
    return acc;
}

Rat Laurent::eval_q1() const {
    Rat acc(0);
    for (const auto& [e, c] : c_) acc += c;
    return acc;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

namespace {

// Dense coefficient vector of the polynomial part, p[k] = coeff of q^(lo+k).
std::vector<Rat> dense(const Laurent& a) {
    std::vector<Rat> v(static_cast<std::size_t>(a.hi() - a.lo()) + 1, Rat(0));
    for (const auto& [e, c] : a.terms()) v[static_cast<std::size_t>(e - a.lo())] = c;
    return v;
}

Laurent from_dense(const std::vector<Rat>& v, long lo) {
    Laurent r;
    for (std::size_t k = 0; k < v.size(); ++k) r.add_term(lo + static_cast<long>(k), v[k]);
    return r;
}

// Long division of dense polynomials; b.back() != 0. Returns {quotient, remainder}.
std::pair<std::vector<Rat>, std::vector<Rat>> polydiv(std::vector<Rat> r, const std::vector<Rat>& b) {
    std::vector<Rat> quo;
    if (r.size() >= b.size()) quo.assign(r.size() - b.size() + 1, Rat(0));
    while (r.size() >= b.size()) {
        if (r.back() == 0) {
            r.pop_back();
            continue;
        }
        Rat f = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        quo[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= f * b[k];
        r.pop_back();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return {quo, r};
}

}  // namespace

Laurent divexact(const Laurent& a, const Laurent& b) {
    if (b.zero()) throw std::domain_error("division by zero polynomial");
    if (a.zero()) return Laurent();
    auto [quo, rem] = polydiv(dense(a), dense(b));
    if (!rem.empty()) throw std::domain_error("inexact polynomial division");
    return from_dense(quo, a.lo() - b.lo());
}

Laurent lgcd(const Laurent& a, const Laurent& b) {
    if (a.zero() && b.zero()) return Laurent();
    auto norm = [](const Laurent& p) {
        std::vector<Rat> v = dense(p);
        Rat lead = v.back();
        for (auto& c : v) c /= lead;
        return from_dense(v, 0);
    };
    if (a.zero()) return norm(b);
    if (b.zero()) return norm(a);
    std::vector<Rat> x = dense(a), y = dense(b);
    while (!y.empty()) {
        auto [quo, rem] = polydiv(x, y);
        (void)quo;
        x = std::move(y);
        y = std::move(rem);
    }
    return norm(from_dense(x, 0));
}

}  // namespace qfock

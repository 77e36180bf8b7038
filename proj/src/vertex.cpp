#include "qfock/vertex.hpp"

#include <algorithm>
#include <string>

namespace qfock {

namespace {

void partitions_rec(long s, long cap, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (s == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(s, cap); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(s - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long>> partitions(long s) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partitions_rec(s, s, cur, out);
    return out;
}

long factorial(long k) {
    long f = 1;
    for (long t = 2; t <= k; ++t) f *= t;
    return f;
}

// prod over distinct parts of mult! for the exponential expansion.
long mult_factorials(const std::vector<long>& mu) {
    long f = 1;
    std::size_t t = 0;
    while (t < mu.size()) {
        std::size_t u = t;
        while (u < mu.size() && mu[u] == mu[t]) ++u;
        f *= factorial(static_cast<long>(u - t));
        t = u;
    }
    return f;
}

RatFn inv_gammas(int n, const std::vector<long>& mu) {
    RatFn c(1);
    for (long part : mu) c = c / RatFn(gamma_poly(n, part));
    return c;
}

// Annihilation layer j of exp(-sum_b b_b / gamma_b).
HPoly<RatFn> annihilation_layer(int n, long j, const HPoly<RatFn>& p) {
    HPoly<RatFn> out;
    for (const auto& mu : partitions(j)) {
        HPoly<RatFn> term = p;
        for (long part : mu) term = hB(part, term, n);
        RatFn c = inv_gammas(n, mu) / RatFn(mult_factorials(mu));
        if (mu.size() % 2 == 1) c = RatFn() - c;
        out += c * term;
    }
    return out;
}

HPoly<RatFn> truncate_degree(const HPoly<RatFn>& p, long max_deg) {
    HPoly<RatFn> out;
    for (const auto& [mu, c] : p.terms) {
        long total = 0;
        for (long part : mu) total += part;
        if (total <= max_deg) out.add(mu, c);
    }
    return out;
}

RatFn vacuum_coeff(const HPoly<RatFn>& p) {
    auto it = p.terms.find({});
    return it == p.terms.end() ? RatFn() : it->second;
}

bool below_window(const RatFn& r, long window) { return r.zero() || r.qval() > window; }

}  // namespace

Series omega_two_point(int n, long m, int order) {
    check_rank(n);
    Series s(order);
    for (long b = 0; b <= order; ++b) {
        FockVec v = straighten({m + 1 - n * b, m + n * b}, m + 1, n);
        auto it = v.terms.find({});
        s[static_cast<int>(b)] = it == v.terms.end() ? RatFn() : RatFn(it->second);
    }
    return s;
}

Series phi_two_point(int n, int order, int kmax) {
    check_rank(n);
    std::vector<std::pair<int, RatFn>> factors;
    for (int k = 0; k <= kmax; ++k) {
        factors.emplace_back(-1, RatFn(Laurent::qpow(2 * n + 2 + 2 * n * k)));
        factors.emplace_back(+1, RatFn(Laurent::qpow(2 * n + 2 * n * k)));
    }
    return series_from_factors(factors, order);
}

bool phi_stable(int n, int order, int kmax, long window) {
    Series lo = phi_two_point(n, order, kmax);
    Series hi = phi_two_point(n, order, kmax + 1);
    for (int s = 0; s <= order; ++s)
        if (!below_window(hi[s] - lo[s], window)) return false;
    return true;
}

HPoly<RatFn> creation_layer(int n, long s) {
    HPoly<RatFn> out;
    for (const auto& mu : partitions(s))
        out.add(mu, inv_gammas(n, mu) / RatFn(mult_factorials(mu)));
    return out;
}

std::vector<RatFn> xi_two_point(int n, int order) {
    check_rank(n);
    std::vector<RatFn> xi(static_cast<std::size_t>(order) + 1);
    xi[0] = RatFn(1);
    for (long s = 1; s <= order; ++s) {
        // exp(-sum_b b_b / gamma_b) applied to the creation layer, term by
        // term in the exponential: A_k = (-1/k) sum_b hB(b, A_{k-1})/gamma_b.
        HPoly<RatFn> a = creation_layer(n, s);
        HPoly<RatFn> total = a;
        for (long k = 1; !a.zero(); ++k) {
            HPoly<RatFn> next;
            for (long b = 1; b <= s; ++b)
                next += (RatFn(1) / RatFn(gamma_poly(n, b))) * hB(b, a, n);
            a = (RatFn(-1) / RatFn(k)) * next;
            total += a;
        }
        xi[static_cast<std::size_t>(s)] = vacuum_coeff(total);
    }
    return xi;
}

Report verify_factorization(int n, long m, int order, int kmax, long window) {
    Report rep;
    rep.add("phi truncation stable (n=" + std::to_string(n) + ")",
            phi_stable(n, order, kmax, window));
    Series omega = omega_two_point(n, m, order);
    Series phi = phi_two_point(n, order, kmax);
    auto xi = xi_two_point(n, order);
    bool pass = true;
    for (int s = 0; s <= order; ++s) {
        RatFn conv;
        for (int u = 0; u <= s; ++u) conv += phi[u] * xi[static_cast<std::size_t>(s - u)];
        pass = pass && below_window(omega[s] - conv, window);
    }
    rep.add("omega = phi * xi to the window (n=" + std::to_string(n) +
                ", m=" + std::to_string(m) + ")",
            pass);
    return rep;
}

Report extract_gamma(int n, long m, int order, int kmax, long window) {
    Report rep;
    Series ratio = omega_two_point(n, m, order) / phi_two_point(n, order, kmax);
    Series lg = series_log(ratio);
    int sign = 0;
    bool pass = true;
    for (int a = 1; a <= order; ++a) {
        RatFn scaled = lg[a] * RatFn(gamma_poly(n, a));
        int here = 0;
        if (below_window(scaled + RatFn(1), window))
            here = -1;
        else if (below_window(scaled - RatFn(1), window))
            here = +1;
        if (here == 0)
            pass = false;
        else if (sign == 0)
            sign = here;
        else if (sign != here)
            pass = false;
    }
    rep.add("log(omega/phi) modes are -1/gamma (n=" + std::to_string(n) + ")",
            pass && sign == -1);
    return rep;
}

Report verify_xi_commutation(int n, int order, long max_k, long max_a, long max_deg) {
    Report rep;
    std::vector<HPoly<RatFn>> layers;
    for (long i = 0; i <= order; ++i) layers.push_back(creation_layer(n, i));

    auto xi_op = [&](long k, const HPoly<RatFn>& p) {
        HPoly<RatFn> out;
        for (long j = std::max(0L, -k); j <= order && k + j <= order; ++j)
            out += layers[static_cast<std::size_t>(k + j)] * annihilation_layer(n, j, p);
        return out;
    };

    std::vector<HPoly<RatFn>> basis;
    for (long s = 0; s <= max_deg; ++s)
        for (const auto& mu : partitions(s)) {
            HPoly<RatFn> p;
            p.add(mu, RatFn(1));
            basis.push_back(p);
        }

    const long cut = order - max_deg - max_a;
    bool pass = true;
    for (long a = 1; a <= max_a; ++a)
        for (long k = -max_k; k <= max_k; ++k)
            for (const auto& p : basis) {
                HPoly<RatFn> lhs = hB(a, xi_op(k, p), n) - xi_op(k, hB(a, p, n));
                HPoly<RatFn> rhs = xi_op(k - a, p);
                pass = pass && truncate_degree(lhs, cut) == truncate_degree(rhs, cut);
            }
    rep.add("[b_a, Xi_k] = Xi_{k-a} (n=" + std::to_string(n) + ")", pass);
    return rep;
}

}  // namespace qfock

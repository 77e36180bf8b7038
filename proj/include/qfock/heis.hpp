#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "qfock/report.hpp"
#include "qfock/rng.hpp"
#include "qfock/uq.hpp"

namespace qfock {

// gamma_a = a (1 + q^{2a} + ... + q^{2a(n-1)}), the central value of
// [B_a, B_{-a}]; a >= 1.
Laurent gamma_poly(int n, long a);

// Shift operator B_a: one slot index drops by n*a, summed over slots.
// Slots beyond the head plus n|a| tail positions contribute zero, so the
// finite window is exact; a != 0.
FockVec bop(long a, const FockVec& v);

// [B_a, B_{-a}] = gamma_a on the charge-m vacua, a = 1..max_a, |m| <= max_charge.
Report verify_gamma(int n, long max_a, long max_charge);

// Pairwise commutation away from the diagonal, the degree grading
// [d, B_a] = a B_a, compatibility with prepending, and centrality against
// E, F, K on random vectors.
Report verify_heisenberg(int n, int samples, Rng& rng);

// Free polynomial module over the lowering half of the Heisenberg algebra:
// basis keyed by descending partitions (b_{-mu_1} b_{-mu_2} ... applied to
// the highest weight vector).
template <class C>
struct HPoly {
    std::map<std::vector<long>, C> terms;

    void add(const std::vector<long>& mu, const C& c) {
        auto it = terms.find(mu);
        if (it == terms.end()) {
            if (!(c == C())) terms.emplace(mu, c);
            return;
        }
        it->second += c;
        if (it->second == C()) terms.erase(it);
    }
    bool zero() const { return terms.empty(); }

    HPoly& operator+=(const HPoly& o) {
        for (const auto& [mu, c] : o.terms) add(mu, c);
        return *this;
    }
    HPoly& operator-=(const HPoly& o) {
        for (const auto& [mu, c] : o.terms) add(mu, C() - c);
        return *this;
    }
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const C& c, const HPoly& p) {
        HPoly out;
        for (const auto& [mu, x] : p.terms) out.add(mu, c * x);
        return out;
    }
    // Product merges partitions: the lowering operators commute.
    friend HPoly operator*(const HPoly& a, const HPoly& b) {
        HPoly out;
        for (const auto& [mu, x] : a.terms)
            for (const auto& [nu, y] : b.terms) {
                std::vector<long> merged = mu;
                merged.insert(merged.end(), nu.begin(), nu.end());
                std::sort(merged.begin(), merged.end(), std::greater<>());
                out.add(merged, x * y);
            }
        return out;
    }
    bool operator==(const HPoly& o) const { return terms == o.terms; }
    bool operator!=(const HPoly& o) const { return !(*this == o); }
};

template <class C>
HPoly<C> hpoly_one() {
    HPoly<C> p;
    p.add({}, C(1));
    return p;
}

// Heisenberg action on the polynomial module: b_{-a} inserts a part,
// b_a removes one copy of a with multiplicity times gamma_a.
template <class C>
HPoly<C> hB(long a, const HPoly<C>& p, int n) {
    if (a == 0) throw std::invalid_argument("B_0 is not defined");
    HPoly<C> out;
    for (const auto& [mu, c] : p.terms) {
        if (a < 0) {
            std::vector<long> nu = mu;
            nu.push_back(-a);
            std::sort(nu.begin(), nu.end(), std::greater<>());
            out.add(nu, c);
        } else {
            long count = 0;
            for (long part : mu)
                if (part == a) ++count;
            if (count == 0) continue;
            std::vector<long> nu;
            bool dropped = false;
            for (long part : mu) {
                if (part == a && !dropped) {
                    dropped = true;
                    continue;
                }
                nu.push_back(part);
            }
            out.add(nu, c * C(Laurent(count) * gamma_poly(n, a)));
        }
    }
    return out;
}

}  // namespace qfock

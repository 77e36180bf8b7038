#include "qfock/heis.hpp"

#include <cstdlib>
#include <string>

#include "qfock/exec.hpp"

namespace qfock {

Laurent gamma_poly(int n, long a) {
    check_rank(n);
    if (a < 1) throw std::invalid_argument("gamma index must be positive");
    Laurent s;
    for (int k = 0; k < n; ++k) s += Laurent::qpow(2 * a * k);
    return Laurent(a) * s;
}

FockVec bop(long a, const FockVec& v) {
    if (a == 0) throw std::invalid_argument("B_0 is not defined");
    const long window = static_cast<long>(v.n) * std::labs(a);
    std::vector<std::pair<std::vector<long>, Laurent>> jobs;
    for (const auto& [h, c] : v.terms) {
        std::vector<long> word = h;
        while (static_cast<long>(word.size()) < static_cast<long>(h.size()) + window)
            word.push_back(v.charge - static_cast<long>(word.size()));
        for (std::size_t k = 0; k < word.size(); ++k) {
            auto shifted = word;
            shifted[k] -= static_cast<long>(v.n) * a;
            jobs.emplace_back(std::move(shifted), c);
        }
    }
    return map_reduce(
        jobs.size(), fock_zero(v.n, v.charge),
        [&](std::size_t t) { return jobs[t].second * straighten(jobs[t].first, v.charge, v.n); },
        [](FockVec& acc, FockVec&& part) { acc += part; });
}

Report verify_gamma(int n, long max_a, long max_charge) {
    Report rep;
    for (long a = 1; a <= max_a; ++a) {
        const Laurent g = gamma_poly(n, a);
        bool pass = true;
        for (long m = -max_charge; m <= max_charge; ++m) {
            FockVec vac = vacuum(n, m);
            FockVec comm = bop(a, bop(-a, vac)) - bop(-a, bop(a, vac));
            pass = pass && comm == g * vac;
        }
        rep.add("[B_" + std::to_string(a) + ", B_-" + std::to_string(a) + "] = gamma (n=" +
                    std::to_string(n) + ")",
                pass);
    }
    return rep;
}

Report verify_heisenberg(int n, int samples, Rng& rng) {
    Report rep;
    const std::string tag = " (n=" + std::to_string(n) + ")";
    const std::pair<long, long> pairs[] = {{1, 2}, {-1, -2}, {1, -2}, {-1, 2}, {2, 3}};
    bool comm = true, grade = true, central = true, prepend = true, scalar = true;
    for (int s = 0; s < samples; ++s) {
        FockVec v = random_fock(rng, n, rng.range(-2, 2), 3, 2);
        for (auto [a1, a2] : pairs)
            comm = comm && bop(a1, bop(a2, v)) == bop(a2, bop(a1, v));
        for (long a : {1L, -1L, 2L, -2L}) {
            FockVec bv = bop(a, v);
            Gen d{GenKind::D, 0};
            grade = grade && act(d, bv) - bop(a, act(d, v)) == Laurent(a) * bv;
            for (int i = 0; i < n; ++i) {
                central = central && act(Gen{GenKind::E, i}, bv) == bop(a, act(Gen{GenKind::E, i}, v));
                central = central && act(Gen{GenKind::F, i}, bv) == bop(a, act(Gen{GenKind::F, i}, v));
                central = central && act(Gen{GenKind::K, i}, bv) == bop(a, act(Gen{GenKind::K, i}, v));
            }
            long c = v.charge + rng.range(0, 2);
            prepend = prepend &&
                      bop(a, wedge_prepend(c, v)) ==
                          wedge_prepend(c - n * a, v) + wedge_prepend(c, bop(a, v));
        }
        // [B_1, B_-1] is the gamma scalar on arbitrary vectors, not just vacua.
        scalar = scalar &&
                 bop(1, bop(-1, v)) - bop(-1, bop(1, v)) == gamma_poly(n, 1) * v;
    }
    rep.add("[B_a1, B_a2] = 0 off the diagonal" + tag, comm);
    rep.add("[d, B_a] = a B_a" + tag, grade);
    rep.add("[B_a, E/F/K] = 0" + tag, central);
    rep.add("B_a (u_c ^ v) = u_{c-na} ^ v + u_c ^ B_a v" + tag, prepend);
    rep.add("[B_1, B_-1] = gamma_1 on random vectors" + tag, scalar);
    return rep;
}

}  // namespace qfock

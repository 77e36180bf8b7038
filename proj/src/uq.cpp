#include "qfock/uq.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qfock/exec.hpp"
#include "qfock/linalg.hpp"

namespace qfock {

namespace {

// One generator applied to one basis wedge.
FockVec act_term(const Gen& g, const std::vector<long>& h, const Laurent& coeff, long charge,
                 int n) {
    FockVec out = fock_zero(n, charge);
    switch (g.kind) {
        case GenKind::K:
        case GenKind::Kinv: {
            Weight w = weight_of(h, charge, n);
            long e = w.kexp[static_cast<std::size_t>(g.i)];
            if (g.kind == GenKind::Kinv) e = -e;
            out.add(h, coeff * Laurent::qpow(e));
            break;
        }
        case GenKind::D: {
            Weight w = weight_of(h, charge, n);
            out.add(h, coeff * Laurent(w.ddeg));
            break;
        }
        case GenKind::E: {
            const long tail = charge - static_cast<long>(h.size());
            long suffix = (ires(tail, n) == g.i) ? 1 : 0;
            for (std::size_t t = h.size(); t-- > 0;) {
                if (ires(h[t] - 1, n) == g.i) {
                    auto word = h;
                    word[t] -= 1;
                    out += (coeff * Laurent::qpow(suffix)) * straighten(word, charge, n);
                }
                suffix += kexp_u(g.i, h[t], n);
            }
            break;
        }
        case GenKind::F: {
            long prefix = 0;
            for (std::size_t t = 0; t < h.size(); ++t) {
                if (ires(h[t], n) == g.i) {
                    auto word = h;
                    word[t] += 1;
                    out += (coeff * Laurent::qpow(-prefix)) * straighten(word, charge, n);
                }
                prefix += kexp_u(g.i, h[t], n);
            }
            const long tail = charge - static_cast<long>(h.size());
            if (ires(tail, n) == g.i) {
                auto word = h;
                word.push_back(tail + 1);
                out += (coeff * Laurent::qpow(-prefix)) * straighten(word, charge, n);
            }
            break;
        }
    }
    return out;
}

}  // namespace

FockVec act(const Gen& g, const FockVec& v) {
    check_gen(g, v.n);
    std::vector<std::pair<std::vector<long>, Laurent>> jobs(v.terms.begin(), v.terms.end());
    return map_reduce(
        jobs.size(), fock_zero(v.n, v.charge),
        [&](std::size_t t) { return act_term(g, jobs[t].first, jobs[t].second, v.charge, v.n); },
        [](FockVec& acc, FockVec&& part) { acc += part; });
}

FockVec act_word(const std::vector<Gen>& word, const FockVec& v) {
    FockVec cur = v;
    for (std::size_t k = word.size(); k-- > 0;) cur = act(word[k], cur);
    return cur;
}

Laurent qint(long k) {
    if (k == 0) return Laurent();
    return divexact(Laurent::qpow(k) - Laurent::qpow(-k), Laurent::qpow(1) - Laurent::qpow(-1));
}

namespace {

long cartan(int i, int j, int n) {
    if (i == j) return 2;
    if (n == 2) return -2;
    int d = ires(i - j, n);
    if (d == 1 || d == n - 1) return -1;
    return 0;
}

}  // namespace

Report verify_defining_relations(int n, int samples, Rng& rng) {
    Report rep;
    const std::string tag = " (n=" + std::to_string(n) + ")";
    const Laurent qdiff = Laurent::qpow(1) - Laurent::qpow(-1);
    bool kk = true, conj = true, comm = true, serre = true, dbr = true, kcomm = true;
    for (int s = 0; s < samples; ++s) {
        FockVec v = random_fock(rng, n, rng.range(-2, 2));
        for (int i = 0; i < n; ++i) {
            Gen Ei{GenKind::E, i}, Fi{GenKind::F, i}, Ki{GenKind::K, i}, Kiv{GenKind::Kinv, i};
            kk = kk && act(Ki, act(Kiv, v)) == v && act(Kiv, act(Ki, v)) == v;
            for (int j = 0; j < n; ++j) {
                Gen Ej{GenKind::E, j}, Fj{GenKind::F, j}, Kj{GenKind::K, j};
                // K_i E_j K_i^{-1} = q^{a_ij} E_j and the F mirror
                conj = conj &&
                       act(Ki, act(Ej, act(Kiv, v))) == Laurent::qpow(cartan(i, j, n)) * act(Ej, v);
                conj = conj &&
                       act(Ki, act(Fj, act(Kiv, v))) == Laurent::qpow(-cartan(i, j, n)) * act(Fj, v);
                kcomm = kcomm && act(Ki, act(Kj, v)) == act(Kj, act(Ki, v));
                // [E_i, F_j] = delta_ij (K_i - K_i^{-1})/(q - q^{-1})
                FockVec lhs = act(Ei, act(Fj, v)) - act(Fj, act(Ei, v));
                if (i == j) {
                    FockVec rhs = fock_zero(n, v.charge);
                    for (const auto& [h, c] : v.terms) {
                        long e = weight_of(h, v.charge, n).kexp[static_cast<std::size_t>(i)];
                        rhs.add(h, c * divexact(Laurent::qpow(e) - Laurent::qpow(-e), qdiff));
                    }
                    comm = comm && lhs == rhs;
                } else {
                    comm = comm && lhs.zero();
                }
                // Serre relations for i != j on adjacent nodes
                if (i != j && n >= 3 && cartan(i, j, n) == -1) {
                    FockVec se = act(Ei, act(Ei, act(Ej, v))) -
                                 qint(2) * act(Ei, act(Ej, act(Ei, v))) +
                                 act(Ej, act(Ei, act(Ei, v)));
                    FockVec sf = act(Fi, act(Fi, act(Fj, v))) -
                                 qint(2) * act(Fi, act(Fj, act(Fi, v))) +
                                 act(Fj, act(Fi, act(Fi, v)));
                    serre = serre && se.zero() && sf.zero();
                }
                if (i != j && n >= 4 && cartan(i, j, n) == 0) {
                    serre = serre && act(Ei, act(Ej, v)) == act(Ej, act(Ei, v)) &&
                            act(Fi, act(Fj, v)) == act(Fj, act(Fi, v));
                }
                if (i != j && n == 2) {
                    FockVec se = act_word({Ei, Ei, Ei, Ej}, v) - qint(3) * act_word({Ei, Ei, Ej, Ei}, v) +
                                 qint(3) * act_word({Ei, Ej, Ei, Ei}, v) - act_word({Ej, Ei, Ei, Ei}, v);
                    FockVec sf = act_word({Fi, Fi, Fi, Fj}, v) - qint(3) * act_word({Fi, Fi, Fj, Fi}, v) +
                                 qint(3) * act_word({Fi, Fj, Fi, Fi}, v) - act_word({Fj, Fi, Fi, Fi}, v);
                    serre = serre && se.zero() && sf.zero();
                }
            }
            // [d, E_i] = delta_{i,0} E_i and [d, F_i] = -delta_{i,0} F_i
            Gen D{GenKind::D, 0};
            FockVec de = act(D, act(Ei, v)) - act(Ei, act(D, v));
            FockVec df = act(D, act(Fi, v)) - act(Fi, act(D, v));
            FockVec dk = act(D, act(Ki, v)) - act(Ki, act(D, v));
            dbr = dbr && dk.zero();
            if (i == 0)
                dbr = dbr && de == act(Ei, v) && df == (Laurent(-1) * act(Fi, v));
            else
                dbr = dbr && de.zero() && df.zero();
        }
    }
    rep.add("K K^{-1} = 1" + tag, kk);
    rep.add("K E K^{-1} = q^{a} E, K F K^{-1} = q^{-a} F" + tag, conj);
    rep.add("K_i K_j commute" + tag, kcomm);
    rep.add("[E_i, F_j] = delta (K - K^{-1})/(q - q^{-1})" + tag, comm);
    rep.add("Serre relations" + tag, serre);
    rep.add("d brackets" + tag, dbr);
    return rep;
}

std::vector<FockVec> singular_vectors(int n, long m, long a) {
    check_rank(n);
    if (a < 0) throw std::invalid_argument("negative degree");
    const Weight target{weight_of({}, m, n).kexp, vacuum_degree(m, n) - a};

    std::vector<std::vector<long>> cands;
    for (const auto& h : enumerate_basis(m, n * a))
        if (weight_of(h, m, n) == target) cands.push_back(h);

    // Rows of the combined (E_0, ..., E_{n-1}) matrix on the candidate span.
    std::map<std::pair<int, std::vector<long>>, std::size_t> rows;
    std::vector<std::vector<std::pair<std::size_t, Laurent>>> cols(cands.size());
    for (std::size_t k = 0; k < cands.size(); ++k) {
        FockVec unit = fock_zero(n, m);
        unit.add(cands[k], Laurent(1));
        for (int i = 0; i < n; ++i) {
            FockVec img = act(Gen{GenKind::E, i}, unit);
            for (const auto& [h, c] : img.terms) {
                auto key = std::make_pair(i, h);
                auto it = rows.find(key);
                if (it == rows.end()) it = rows.emplace(key, rows.size()).first;
                cols[k].emplace_back(it->second, c);
            }
        }
    }

    std::vector<std::vector<RatFn>> kernel;
    if (rows.empty()) {
        // No E_i image at all: the whole component is singular.
        kernel.assign(cands.size(), std::vector<RatFn>(cands.size()));
        for (std::size_t k = 0; k < cands.size(); ++k) kernel[k][k] = RatFn(1);
    } else {
        Matrix M(rows.size(), std::vector<RatFn>(cands.size()));
        for (std::size_t k = 0; k < cands.size(); ++k)
            for (const auto& [r, c] : cols[k]) M[r][k] = RatFn(c);
        kernel = matrix_kernel(M);
    }

    std::vector<FockVec> basis;
    basis.reserve(kernel.size());
    for (const auto& vec : kernel) {
        auto prim = primitive_scale(vec);
        FockVec v = fock_zero(n, m);
        for (std::size_t k = 0; k < cands.size(); ++k) v.add(cands[k], prim[k]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qfock

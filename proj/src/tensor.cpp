#include "qfock/tensor.hpp"

#include <stdexcept>

#include "qfock/exec.hpp"

namespace qfock {

void TensorVec::add(const std::vector<long>& w, const Laurent& c) {
    if (static_cast<int>(w.size()) != N) throw std::invalid_argument("tuple length mismatch");
    if (c.zero()) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.zero()) terms.erase(it);
    }
}

TensorVec& TensorVec::operator+=(const TensorVec& o) {
    if (n != o.n || N != o.N) throw std::invalid_argument("tensor shape mismatch");
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

TensorVec& TensorVec::operator-=(const TensorVec& o) {
    if (n != o.n || N != o.N) throw std::invalid_argument("tensor shape mismatch");
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
}

TensorVec operator*(const Laurent& c, TensorVec v) {
    if (c.zero()) {
        v.terms.clear();
        return v;
    }
    for (auto& [w, coeff] : v.terms) coeff *= c;
    return v;
}

TensorVec tensor_unit(int n, std::vector<long> w, Laurent c) {
    check_rank(n);
    if (w.empty()) throw std::invalid_argument("empty tensor word");
    TensorVec v;
    v.n = n;
    v.N = static_cast<int>(w.size());
    v.add(w, c);
    return v;
}

TensorVec coproduct_action(const Gen& g, const TensorVec& v) {
    check_gen(g, v.n);
    TensorVec out;
    out.n = v.n;
    out.N = v.N;
    const int n = v.n;
    for (const auto& [w, c] : v.terms) {
        switch (g.kind) {
            case GenKind::K:
            case GenKind::Kinv: {
                long e = 0;
                for (long m : w) e += kexp_u(g.i, m, n);
                if (g.kind == GenKind::Kinv) e = -e;
                out.add(w, c * Laurent::qpow(e));
                break;
            }
            case GenKind::D: {
                long deg = 0;
                for (long m : w) deg += decompose(m, n).a;
                out.add(w, c * Laurent(deg));
                break;
            }
            case GenKind::E: {
                long suffix = 0;
                for (int k = v.N - 1; k >= 0; --k) {
                    if (ires(w[static_cast<std::size_t>(k)] - 1, n) == g.i) {
                        auto w2 = w;
                        w2[static_cast<std::size_t>(k)] -= 1;
                        out.add(w2, c * Laurent::qpow(suffix));
                    }
                    suffix += kexp_u(g.i, w[static_cast<std::size_t>(k)], n);
                }
                break;
            }
            case GenKind::F: {
                long prefix = 0;
                for (int k = 0; k < v.N; ++k) {
                    if (ires(w[static_cast<std::size_t>(k)], n) == g.i) {
                        auto w2 = w;
                        w2[static_cast<std::size_t>(k)] += 1;
                        out.add(w2, c * Laurent::qpow(-prefix));
                    }
                    prefix += kexp_u(g.i, w[static_cast<std::size_t>(k)], n);
                }
                break;
            }
        }
    }
    return out;
}

namespace {

// Monomial expansions of the divided differences on z-exponent pairs (a, b):
// each entry is ((s, t), sign) for a monomial z_i^s z_{i+1}^t.
// dd_twist expands (z_{i+1} z^swapped - z_i z) / (z_i - z_{i+1}),
// dd_plain expands z_i (z^swapped - z) / (z_i - z_{i+1}).
std::vector<std::pair<std::pair<long, long>, int>> dd_twist(long a, long b) {
    std::vector<std::pair<std::pair<long, long>, int>> out;
    if (b == a + 1) return out;
    if (b > a + 1)
        for (long r = 0; r <= b - a - 2; ++r) out.push_back({{b - 1 - r, a + 1 + r}, +1});
    else
        for (long r = 0; r <= a - b; ++r) out.push_back({{a - r, b + r}, -1});
    return out;
}

std::vector<std::pair<std::pair<long, long>, int>> dd_plain(long a, long b) {
    std::vector<std::pair<std::pair<long, long>, int>> out;
    if (a == b) return out;
    if (b > a)
        for (long r = 0; r <= b - a - 1; ++r) out.push_back({{b - r, a + r}, +1});
    else
        for (long r = 0; r <= a - b - 1; ++r) out.push_back({{a - r, b + r}, -1});
    return out;
}

}  // namespace

TensorVec hecke_T(int i, const TensorVec& v) {
    if (i < 1 || i >= v.N) throw std::invalid_argument("T index out of range");
    const int n = v.n;
    TensorVec out;
    out.n = n;
    out.N = v.N;
    const Laurent qq1 = Laurent::qpow(2) - Laurent(1);
    const std::size_t p = static_cast<std::size_t>(i - 1);
    for (const auto& [w, c] : v.terms) {
        const long m1 = w[p], m2 = w[p + 1];
        const ZV l = decompose(m1, n), r = decompose(m2, n);
        auto swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        const bool distinct = l.j != r.j;
        out.add(swapped, distinct ? c * (-Laurent::qpow(1)) : -c);
        const auto dd = (l.j < r.j) ? dd_twist(l.a, r.a) : dd_plain(l.a, r.a);
        for (const auto& [st, sign] : dd) {
            auto w2 = w;
            w2[p] = l.j - st.first * n;
            w2[p + 1] = r.j - st.second * n;
            out.add(w2, c * qq1 * Laurent(-sign));
        }
    }
    return out;
}

TensorVec hecke_Tinv(int i, const TensorVec& v) {
    // T^{-1} = q^{-2} T + (q^{-2} - 1)
    TensorVec t = hecke_T(i, v);
    return Laurent::qpow(-2) * t + (Laurent::qpow(-2) - Laurent(1)) * v;
}

TensorVec hecke_y(int j, long c, const TensorVec& v) {
    if (j < 1 || j > v.N) throw std::invalid_argument("y index out of range");
    TensorVec out;
    out.n = v.n;
    out.N = v.N;
    for (const auto& [w, coeff] : v.terms) {
        auto w2 = w;
        w2[static_cast<std::size_t>(j - 1)] += c * v.n;
        out.add(w2, coeff);
    }
    return out;
}

TensorVec tensor_B(long a, const TensorVec& v) {
    if (a == 0) throw std::invalid_argument("B_0 is not defined");
    TensorVec out;
    out.n = v.n;
    out.N = v.N;
    for (int k = 1; k <= v.N; ++k) out += hecke_y(k, -a, v);
    return out;
}

namespace {

TensorVec antisymmetrize_term(const TensorVec& t) {
    TensorVec acc = t;
    std::map<std::vector<int>, TensorVec> cur;
    std::vector<int> id(static_cast<std::size_t>(t.N));
    for (int k = 0; k < t.N; ++k) id[static_cast<std::size_t>(k)] = k;
    cur.emplace(id, t);
    while (!cur.empty()) {
        std::map<std::vector<int>, TensorVec> next;
        for (const auto& [sigma, vec] : cur) {
            for (int i = 1; i < t.N; ++i) {
                const std::size_t p = static_cast<std::size_t>(i - 1);
                if (sigma[p] < sigma[p + 1]) {
                    auto tau = sigma;
                    std::swap(tau[p], tau[p + 1]);
                    if (next.find(tau) == next.end()) {
                        TensorVec r = hecke_T(i, vec);
                        acc += r;
                        next.emplace(std::move(tau), std::move(r));
                    }
                }
            }
        }
        cur = std::move(next);
    }
    return acc;
}

}  // namespace

TensorVec antisymmetrize(const TensorVec& v) {
    if (v.N > 6) throw std::domain_error("antisymmetrizer bounded at N = 6");
    TensorVec zero;
    zero.n = v.n;
    zero.N = v.N;
    if (v.zero()) return zero;
    std::vector<TensorVec> jobs;
    jobs.reserve(v.terms.size());
    for (const auto& [w, c] : v.terms) jobs.push_back(tensor_unit(v.n, w, c));
    return map_reduce(
        jobs.size(), zero, [&](std::size_t k) { return antisymmetrize_term(jobs[k]); },
        [](TensorVec& acc, TensorVec&& part) { acc += part; });
}

Laurent antisym_scalar(int N) {
    Laurent prod(1);
    const Laurent base = Laurent(1) - Laurent::qpow(2);
    for (int m = 1; m <= N; ++m) prod *= divexact(Laurent(1) - Laurent::qpow(2 * m), base);
    return prod;
}

Membership split_membership(const TensorVec& v) {
    if (v.zero()) return Membership::kernel;
    TensorVec w = antisymmetrize(v);
    if (w.zero()) return Membership::kernel;
    if (w == antisym_scalar(v.N) * v) return Membership::image;
    return Membership::mixed;
}

TensorVec random_tensor(Rng& rng, int n, int N, int max_terms, long lo, long hi) {
    TensorVec v;
    v.n = n;
    v.N = N;
    int terms = static_cast<int>(rng.range(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        std::vector<long> w(static_cast<std::size_t>(N));
        for (auto& m : w) m = rng.range(lo, hi);
        long c = rng.range(-3, 3);
        if (c == 0) c = 1;
        v.add(w, Laurent::term(Rat(c), rng.range(-2, 2)));
    }
    return v;
}

Report verify_hecke_relations(int n, int N, int samples, Rng& rng) {
    Report rep;
    const Laurent q2 = Laurent::qpow(2);
    const Laurent qq1 = q2 - Laurent(1);
    bool quad = true, braid = true, farT = true, ycomm = true, mixed = true, tyt = true,
         inv = true, eig = true;
    for (int s = 0; s < samples; ++s) {
        TensorVec v = random_tensor(rng, n, N);
        for (int i = 1; i < N; ++i) {
            TensorVec tv = hecke_T(i, v);
            quad = quad && hecke_T(i, tv) == qq1 * tv + q2 * v;
            inv = inv && hecke_Tinv(i, tv) == v && hecke_T(i, hecke_Tinv(i, v)) == v;
            TensorVec w1 = tv + v;
            eig = eig && (hecke_T(i, w1) - q2 * w1).zero();
            tyt = tyt && hecke_T(i, hecke_y(i, 1, tv)) == q2 * hecke_y(i + 1, 1, v);
            for (int j = 1; j <= N; ++j)
                if (j != i && j != i + 1)
                    mixed = mixed && hecke_T(i, hecke_y(j, 1, v)) == hecke_y(j, 1, tv);
        }
        for (int i = 1; i + 1 < N; ++i)
            braid = braid && hecke_T(i, hecke_T(i + 1, hecke_T(i, v))) ==
                                 hecke_T(i + 1, hecke_T(i, hecke_T(i + 1, v)));
        for (int i = 1; i < N; ++i)
            for (int j = i + 2; j < N; ++j)
                farT = farT && hecke_T(i, hecke_T(j, v)) == hecke_T(j, hecke_T(i, v));
        for (int j = 1; j <= N; ++j)
            for (int k = j + 1; k <= N; ++k)
                ycomm = ycomm && hecke_y(j, 1, hecke_y(k, -2, v)) == hecke_y(k, -2, hecke_y(j, 1, v));
    }
    std::string tag = " (n=" + std::to_string(n) + ", N=" + std::to_string(N) + ")";
    rep.add("T quadratic" + tag, quad);
    if (N >= 3) rep.add("T braid" + tag, braid);
    if (N >= 4) rep.add("T far commute" + tag, farT);
    rep.add("y commute" + tag, ycomm);
    rep.add("T y mixed commute" + tag, mixed);
    rep.add("T y T = q^2 y'" + tag, tyt);
    rep.add("T inverse" + tag, inv);
    rep.add("(T+1)(T-q^2) = 0" + tag, eig);
    return rep;
}

Report verify_centrality(int n, int N, long a, int samples, Rng& rng) {
    Report rep;
    bool withT = true, withY = true;
    for (int s = 0; s < samples; ++s) {
        TensorVec v = random_tensor(rng, n, N);
        for (int i = 1; i < N; ++i)
            withT = withT && hecke_T(i, tensor_B(a, v)) == tensor_B(a, hecke_T(i, v));
        for (int j = 1; j <= N; ++j)
            withY = withY && hecke_y(j, 1, tensor_B(a, v)) == tensor_B(a, hecke_y(j, 1, v));
    }
    std::string tag = " (n=" + std::to_string(n) + ", N=" + std::to_string(N) +
                      ", a=" + std::to_string(a) + ")";
    rep.add("B central vs T" + tag, withT);
    rep.add("B central vs y" + tag, withY);
    return rep;
}

Report verify_intertwining(int n, int N, int samples, Rng& rng) {
    Report rep;
    bool ok = true;
    std::vector<Gen> gens;
    for (int i = 0; i < n; ++i) {
        gens.push_back({GenKind::E, i});
        gens.push_back({GenKind::F, i});
        gens.push_back({GenKind::K, i});
        gens.push_back({GenKind::Kinv, i});
    }
    gens.push_back({GenKind::D, 0});
    for (int s = 0; s < samples; ++s) {
        TensorVec v = random_tensor(rng, n, N);
        for (const Gen& g : gens)
            for (int i = 1; i < N; ++i)
                ok = ok && hecke_T(i, coproduct_action(g, v)) == coproduct_action(g, hecke_T(i, v));
    }
    rep.add("left action commutes with T (n=" + std::to_string(n) + ", N=" + std::to_string(N) + ")",
            ok);
    return rep;
}

}  // namespace qfock

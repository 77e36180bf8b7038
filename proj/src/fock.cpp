#include "qfock/fock.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qfock/exec.hpp"

namespace qfock {

void FockVec::add(const std::vector<long>& head, const Laurent& c) {
    if (c.zero()) return;
    auto [it, fresh] = terms.emplace(head, c);
    if (!fresh) {
        it->second += c;
        if (it->second.zero()) terms.erase(it);
    }
}

FockVec& FockVec::operator+=(const FockVec& o) {
    if (n != o.n) throw semantic_error("rank mismatch");
    if (charge != o.charge) throw semantic_error("charge mismatch");
    for (const auto& [h, c] : o.terms) add(h, c);
    return *this;
}

FockVec& FockVec::operator-=(const FockVec& o) {
    if (n != o.n) throw semantic_error("rank mismatch");
    if (charge != o.charge) throw semantic_error("charge mismatch");
    for (const auto& [h, c] : o.terms) add(h, -c);
    return *this;
}

FockVec operator*(const Laurent& c, FockVec v) {
    if (c.zero()) {
        v.terms.clear();
        return v;
    }
    for (auto& [h, coeff] : v.terms) coeff *= c;
    return v;
}

FockVec fock_zero(int n, long charge) {
    check_rank(n);
    FockVec v;
    v.n = n;
    v.charge = charge;
    return v;
}

FockVec vacuum(int n, long charge) {
    FockVec v = fock_zero(n, charge);
    v.add({}, Laurent(1));
    return v;
}

FockVec basis_wedge(int n, long charge, const std::vector<long>& head) {
    FockVec v = fock_zero(n, charge);
    for (std::size_t t = 0; t < head.size(); ++t) {
        if (t + 1 < head.size() && head[t] <= head[t + 1])
            throw std::invalid_argument("head not strictly decreasing");
        if (head[t] < charge - static_cast<long>(t)) throw std::invalid_argument("head below vacuum");
    }
    if (!head.empty() && head.back() == charge - static_cast<long>(head.size()) + 1)
        throw std::invalid_argument("head not trimmed");
    v.add(head, Laurent(1));
    return v;
}

namespace {

// Rewrite data for an unordered adjacent pair u_l (x) u_m with l < m:
// entries (s, coeff) produce the pair (u_{m-s}, u_{l+s}). The s = 0 entry is
// the reversal; the walk entries step through the interval while ordered.
const std::vector<std::pair<long, Laurent>>& pair_rule(long d, int n) {
    thread_local std::map<std::pair<int, long>, std::vector<std::pair<long, Laurent>>> memo;
    auto key = std::make_pair(n, d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<std::pair<long, Laurent>> rule;
    const long i = ires(d, n);
    if (i == 0) {
        rule.emplace_back(0, Laurent(-1));
    } else {
        rule.emplace_back(0, -Laurent::qpow(1));
        const Laurent qq1 = Laurent::qpow(2) - Laurent(1);
        Laurent walkc = qq1;
        for (long t = 1;; ++t) {
            const long r = t / 2;
            const long s = (t % 2 == 1) ? r * n + i : r * n;
            if (2 * s >= d) break;  // equal indices die; past the middle stops
            rule.emplace_back(s, walkc);
            walkc *= -Laurent::qpow(1);
        }
    }
    return memo.emplace(key, std::move(rule)).first->second;
}

// Position of the leftmost adjacent non-decreasing pair, or npos.
std::size_t first_violation(const std::vector<long>& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] <= w[k + 1]) return k;
    return static_cast<std::size_t>(-1);
}

constexpr std::size_t kRewriteCap = 1000000;

}  // namespace

FockVec straighten(const std::vector<long>& word, long charge, int n) {
    FockVec out = fock_zero(n, charge);

    // The implicit tail is made explicit down to the smallest index in the
    // word; rewrites stay inside the interval spanned by a pair, so nothing
    // can reach deeper.
    std::vector<long> w = word;
    if (!w.empty()) {
        const long minw = *std::min_element(w.begin(), w.end());
        const long L = std::max<long>(static_cast<long>(w.size()), charge - minw + 1);
        for (long t = static_cast<long>(w.size()) + 1; t <= L; ++t) w.push_back(charge - t + 1);
    }

    std::map<std::vector<long>, Laurent> pending;
    if (!w.empty()) pending.emplace(w, Laurent(1));
    std::size_t rewrites = 0;

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::vector<long>& cur = node.key();
        const Laurent& coeff = node.mapped();
        const std::size_t k = first_violation(cur);
        if (k == static_cast<std::size_t>(-1)) {
            // Normally ordered: trim the vacuum-coincident tail.
            std::vector<long> head = cur;
            while (!head.empty() && head.back() == charge - static_cast<long>(head.size()) + 1)
                head.pop_back();
            out.add(head, coeff);
            continue;
        }
        if (++rewrites > kRewriteCap) throw std::runtime_error("straightening rewrite cap exceeded");
        const long l = cur[k], m = cur[k + 1];
        if (l == m) continue;  // repeated factor
        for (const auto& [s, c] : pair_rule(m - l, n)) {
            std::vector<long> next = cur;
            next[k] = m - s;
            next[k + 1] = l + s;
            auto [it, fresh] = pending.emplace(std::move(next), coeff * c);
            if (!fresh) {
                it->second += coeff * c;
                if (it->second.zero()) pending.erase(it);
            }
        }
    }

    if (word.empty()) out.add({}, Laurent(1));
    return out;
}

FockVec wedge_prepend(long a, const FockVec& v) {
    FockVec out = fock_zero(v.n, v.charge + 1);
    std::vector<std::pair<std::vector<long>, Laurent>> jobs(v.terms.begin(), v.terms.end());
    return map_reduce(
        jobs.size(), out,
        [&](std::size_t t) {
            std::vector<long> word;
            word.reserve(jobs[t].first.size() + 1);
            word.push_back(a);
            word.insert(word.end(), jobs[t].first.begin(), jobs[t].first.end());
            return jobs[t].second * straighten(word, v.charge + 1, v.n);
        },
        [](FockVec& acc, FockVec&& part) { acc += part; });
}

namespace {

void partitions_rec(long s, long maxpart, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (s == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(s, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(s - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<long>> enumerate_basis(long charge, long s) {
    if (s < 0) throw std::invalid_argument("negative partition size");
    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    partitions_rec(s, s, cur, parts);
    std::vector<std::vector<long>> heads;
    heads.reserve(parts.size());
    for (const auto& lam : parts) {
        std::vector<long> head(lam.size());
        for (std::size_t t = 0; t < lam.size(); ++t)
            head[t] = lam[t] + charge - static_cast<long>(t);
        heads.push_back(std::move(head));
    }
    return heads;
}

long vacuum_degree(long m, int n) {
    check_rank(n);
    long d = 0;
    if (m > 0)
        for (long k = 1; k <= m; ++k) d += decompose(k, n).a;
    else
        for (long k = m + 1; k <= 0; ++k) d -= decompose(k, n).a;
    return d;
}

Weight weight_of(const std::vector<long>& head, long charge, int n) {
    check_rank(n);
    Weight w;
    w.kexp.assign(static_cast<std::size_t>(n), 0);
    w.kexp[static_cast<std::size_t>(ires(charge, n))] = 1;
    w.ddeg = vacuum_degree(charge, n);
    for (std::size_t t = 0; t < head.size(); ++t) {
        const long vac = charge - static_cast<long>(t);
        for (int i = 0; i < n; ++i)
            w.kexp[static_cast<std::size_t>(i)] += kexp_u(i, head[t], n) - kexp_u(i, vac, n);
        w.ddeg += decompose(head[t], n).a - decompose(vac, n).a;
    }
    return w;
}

std::vector<long> head_partition(const std::vector<long>& head, long charge) {
    std::vector<long> lam(head.size());
    for (std::size_t t = 0; t < head.size(); ++t)
        lam[t] = head[t] - (charge - static_cast<long>(t));
    return lam;
}

FockVec random_fock(Rng& rng, int n, long charge, long max_size, int max_terms) {
    FockVec v = fock_zero(n, charge);
    int terms = static_cast<int>(rng.range(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        long s = rng.range(0, max_size);
        auto heads = enumerate_basis(charge, s);
        auto head = heads[static_cast<std::size_t>(rng.range(0, static_cast<long>(heads.size()) - 1))];
        long c = rng.range(-3, 3);
        if (c == 0) c = 1;
        v.add(head, Laurent::term(Rat(c), rng.range(-2, 2)));
    }
    return v;
}

Report verify_classical(int n, int samples, Rng& rng) {
    check_rank(n);
    bool ok = true;
    for (int s = 0; s < samples; ++s) {
        long charge = rng.range(-2, 2);
        int len = static_cast<int>(rng.range(2, 4));
        std::vector<long> word;
        for (int k = 0; k < len; ++k) word.push_back(rng.range(-4, 6));
        FockVec got = straighten(word, charge, n);

        // Window the word spans: vacuum values appended down to its minimum.
        std::vector<long> w = word;
        long lo = *std::min_element(w.begin(), w.end());
        while (static_cast<long>(w.size()) < charge - lo + 1)
            w.push_back(charge - static_cast<long>(w.size()));
        bool repeat = false;
        long inversions = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                if (w[i] == w[j]) repeat = true;
                if (w[i] < w[j]) ++inversions;
            }
        if (repeat) {
            for (const auto& [head, c] : got.terms) ok = ok && c.eval_q1() == 0;
            continue;
        }
        std::sort(w.begin(), w.end(), std::greater<long>());
        while (!w.empty() && w.back() == charge - static_cast<long>(w.size()) + 1) w.pop_back();
        Rat sign = (inversions % 2 == 0) ? Rat(1) : Rat(-1);
        for (const auto& [head, c] : got.terms)
            ok = ok && c.eval_q1() == (head == w ? sign : Rat(0));
        ok = ok && got.terms.count(w) == 1;
    }
    Report r;
    r.add("q = 1 straightening is the signed sort (n=" + std::to_string(n) + ")", ok);
    return r;
}

}  // namespace qfock

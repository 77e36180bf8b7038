#include "qfock/evalmod.hpp"

#include <stdexcept>

namespace qfock {

void check_rank(int n) {
    if (n < 2) throw std::invalid_argument("rank must be >= 2");
}

int ires(long m, int n) {
    check_rank(n);
    long r = m % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

ZV decompose(long m, int n) {
    check_rank(n);
    int j = ires(m - 1, n) + 1;
    return ZV{j, (j - m) / n};
}

void check_gen(const Gen& g, int n) {
    check_rank(n);
    if (g.kind != GenKind::D && (g.i < 0 || g.i >= n))
        throw std::invalid_argument("generator index out of range");
}

int kexp_u(int i, long m, int n) {
    int r = ires(m, n);
    int e = 0;
    if (r == ires(i, n)) e += 1;
    if (r == ires(i + 1, n)) e -= 1;
    return e;
}

std::vector<std::pair<long, Laurent>> gen_on_u(const Gen& g, long m, int n) {
    check_gen(g, n);
    switch (g.kind) {
        case GenKind::E:
            if (ires(m - 1, n) == g.i) return {{m - 1, Laurent(1)}};
            return {};
        case GenKind::F:
            if (ires(m, n) == g.i) return {{m + 1, Laurent(1)}};
            return {};
        case GenKind::K:
            return {{m, Laurent::qpow(kexp_u(g.i, m, n))}};
        case GenKind::Kinv:
            return {{m, Laurent::qpow(-kexp_u(g.i, m, n))}};
        case GenKind::D: {
            long a = decompose(m, n).a;
            if (a == 0) return {};
            return {{m, Laurent(a)}};
        }
    }
    return {};
}

}  // namespace qfock

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfock/uq.hpp"

using namespace qfock;

namespace {

Laurent q(long e) { return Laurent::qpow(e); }

FockVec wedge(int n, long charge, std::vector<long> head) {
    return basis_wedge(n, charge, std::move(head));
}

Gen E(int i) { return Gen{GenKind::E, i}; }
Gen F(int i) { return Gen{GenKind::F, i}; }
Gen K(int i) { return Gen{GenKind::K, i}; }
const Gen D{GenKind::D, 0};

}  // namespace

TEST_CASE("quantized integers") {
    CHECK(qint(0).zero());
    CHECK(qint(1) == Laurent(1));
    CHECK(qint(2) == q(1) + q(-1));
    CHECK(qint(3) == q(2) + Laurent(1) + q(-2));
    CHECK(qint(-2) == Laurent(-1) * qint(2));
}

TEST_CASE("action on vacua") {
    for (int n : {2, 3})
        for (long m = -2; m <= 2; ++m) {
            FockVec vac = vacuum(n, m);
            for (int i = 0; i < n; ++i) {
                CHECK(act(E(i), vac).zero());
                // F_i adds the one allowed box.
                FockVec fv = act(F(i), vac);
                if (ires(m, n) == i)
                    CHECK(fv == straighten({m + 1}, m, n));
                else
                    CHECK(fv.zero());
                // K_i reads off the vacuum weight.
                long e = (ires(m, n) == i) ? 1 : 0;
                CHECK(act(K(i), vac) == q(e) * vac);
            }
            CHECK(act(D, vac) == Laurent(vacuum_degree(m, n)) * vac);
        }
}

TEST_CASE("action on small wedges") {
    CHECK(act(E(1), wedge(2, 0, {2})) == q(1) * wedge(2, 0, {1}));
    CHECK(act(E(0), wedge(2, 0, {2})).zero());
    CHECK(act(E(1), wedge(2, 0, {1, 0})) == wedge(2, 0, {1}));
    CHECK(act(E(0), wedge(2, 0, {1, 0})).zero());
    CHECK(act(F(0), vacuum(2, 0)) == wedge(2, 0, {1}));
    CHECK(act(F(1), vacuum(2, 0)).zero());
    CHECK(act(F(1), wedge(2, 0, {1})) == wedge(2, 0, {2}) + q(-1) * wedge(2, 0, {1, 0}));
    CHECK(act(D, wedge(2, 0, {2})) == Laurent(-1) * wedge(2, 0, {2}));
    CHECK(act(D, wedge(2, 0, {1, 0})) == Laurent(-1) * wedge(2, 0, {1, 0}));
}

TEST_CASE("composition order is rightmost first") {
    CHECK(act_word({F(0), F(1)}, vacuum(2, 0)).zero());
    CHECK(act_word({F(1), F(0)}, vacuum(2, 0)) ==
          wedge(2, 0, {2}) + q(-1) * wedge(2, 0, {1, 0}));
    CHECK(act_word({}, wedge(2, 0, {2})) == wedge(2, 0, {2}));
}

TEST_CASE("one commutator at charge zero") {
    // v = (F_0 F_1 - q F_1 F_0) |0> collapses to its second term.
    FockVec v = act_word({F(0), F(1)}, vacuum(2, 0)) -
                q(1) * act_word({F(1), F(0)}, vacuum(2, 0));
    CHECK(v == Laurent(-1) * q(1) * wedge(2, 0, {2}) - wedge(2, 0, {1, 0}));
    CHECK(act(E(0), v).zero());
    // v is not a highest weight vector: E_1 sees it.
    CHECK(act(E(1), v) == Laurent(-1) * (Laurent(1) + q(2)) * wedge(2, 0, {1}));
    // The singular combination one level down is [2] - q [1,0].
    FockVec s = wedge(2, 0, {2}) - q(1) * wedge(2, 0, {1, 0});
    CHECK(act(E(0), s).zero());
    CHECK(act(E(1), s).zero());
}

TEST_CASE("action is compatible with prepending") {
    // E_i (u_a ^ v) = (E_i u_a) ^ (K_i v) + u_a ^ (E_i v), and its F and K
    // versions: the head computation is independent of the truncation.
    Rng rng(31);
    for (int s = 0; s < 25; ++s) {
        int n = static_cast<int>(rng.range(2, 3));
        long charge = rng.range(-2, 2);
        FockVec v = random_fock(rng, n, charge);
        long a = rng.range(charge - 1, charge + 4);
        for (int i = 0; i < n; ++i) {
            FockVec pe = act(E(i), wedge_prepend(a, v));
            FockVec re = wedge_prepend(a, act(E(i), v));
            if (ires(a - 1, n) == i) re += wedge_prepend(a - 1, act(K(i), v));
            CHECK(pe == re);

            FockVec pf = act(F(i), wedge_prepend(a, v));
            FockVec rf = q(-kexp_u(i, a, n)) * wedge_prepend(a, act(F(i), v));
            if (ires(a, n) == i) rf += wedge_prepend(a + 1, v);
            CHECK(pf == rf);

            CHECK(act(K(i), wedge_prepend(a, v)) ==
                  q(kexp_u(i, a, n)) * wedge_prepend(a, act(K(i), v)));
        }
        FockVec pd = act(D, wedge_prepend(a, v));
        CHECK(pd == wedge_prepend(a, act(D, v)) +
                        Laurent(decompose(a, n).a) * wedge_prepend(a, v));
    }
}

TEST_CASE("weight covariance") {
    Rng rng(37);
    for (int s = 0; s < 20; ++s) {
        int n = static_cast<int>(rng.range(2, 3));
        long charge = rng.range(-1, 1);
        auto sizes = enumerate_basis(charge, rng.range(0, 4));
        const auto& head = sizes[static_cast<std::size_t>(rng.range(0, static_cast<long>(sizes.size()) - 1))];
        Weight w = weight_of(head, charge, n);
        for (int i = 0; i < n; ++i) {
            FockVec img = act(F(i), wedge(n, charge, head));
            for (const auto& [h, c] : img.terms) {
                Weight wh = weight_of(h, charge, n);
                CHECK(wh.ddeg == w.ddeg - (i == 0 ? 1 : 0));
                for (int j = 0; j < n; ++j) {
                    long shift = (j == i) ? -2 : 0;
                    if (j != i && n == 2) shift = 2;
                    if (j != i && n == 3) shift = 1;
                    CHECK(wh.kexp[static_cast<std::size_t>(j)] ==
                          w.kexp[static_cast<std::size_t>(j)] + shift);
                }
            }
        }
    }
}

TEST_CASE("defining relations on random vectors") {
    Rng rng(41);
    Report r2 = verify_defining_relations(2, 2, rng);
    for (const auto& [name, pass] : r2.checks) {
        INFO(name);
        CHECK(pass);
    }
    Report r3 = verify_defining_relations(3, 1, rng);
    for (const auto& [name, pass] : r3.checks) {
        INFO(name);
        CHECK(pass);
    }
}

TEST_CASE("singular vectors") {
    // Dimension is the partition number of the level.
    long expect[] = {1, 1, 2, 3};
    for (long a = 0; a <= 3; ++a) {
        CHECK(singular_vectors(2, 0, a).size() == static_cast<std::size_t>(expect[a]));
        CHECK(singular_vectors(3, 0, a).size() == static_cast<std::size_t>(expect[a]));
    }
    CHECK(singular_vectors(2, 1, 2).size() == 2);

    // The level-1 vector at charge 0, n = 2, normalized primitively.
    auto s1 = singular_vectors(2, 0, 1);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0] == wedge(2, 0, {2}) - q(1) * wedge(2, 0, {1, 0}));

    // Every returned vector is killed by all E_i and sits in the right
    // weight space.
    for (int n : {2, 3})
        for (long a = 0; a <= 2; ++a)
            for (const auto& v : singular_vectors(n, 0, a)) {
                CHECK(!v.zero());
                for (int i = 0; i < n; ++i) CHECK(act(E(i), v).zero());
                for (const auto& [h, c] : v.terms) {
                    Weight w = weight_of(h, 0, n);
                    CHECK(w.kexp == weight_of({}, 0, n).kexp);
                    CHECK(w.ddeg == vacuum_degree(0, n) - a);
                }
            }
}

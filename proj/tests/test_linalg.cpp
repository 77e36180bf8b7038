#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfock/linalg.hpp"
#include "qfock/rng.hpp"

using namespace qfock;

namespace {

Laurent q(long e) { return Laurent::qpow(e); }

bool kills(const Matrix& M, const std::vector<RatFn>& v) {
    for (const auto& row : M) {
        RatFn acc;
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
        if (!acc.zero()) return false;
    }
    return true;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix M(rows, std::vector<RatFn>(cols));
    for (auto& row : M)
        for (auto& e : row) {
            if (rng.range(0, 2) == 0) continue;  // keep it sparse
            e = RatFn(Laurent::term(Rat(rng.range(-3, 3)), rng.range(-2, 2)));
        }
    return M;
}

}  // namespace

TEST_CASE("kernel of identity and zero matrices") {
    Matrix id(3, std::vector<RatFn>(3));
    for (int i = 0; i < 3; ++i) id[i][i] = RatFn(1);
    CHECK(matrix_kernel(id).empty());

    Matrix z(2, std::vector<RatFn>(2));
    auto k = matrix_kernel(z);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(kills(z, v));
}

TEST_CASE("rank-one kernel") {
    Matrix M{{RatFn(1), RatFn(q(1))}, {RatFn(q(1)), RatFn(q(2))}};
    auto k = matrix_kernel(M);
    REQUIRE(k.size() == 1);
    CHECK(kills(M, k[0]));
    // Spanned by (q, -1) up to scale.
    CHECK(k[0][0] * RatFn(Laurent(-1)) == k[0][1] * RatFn(q(1)));
    auto prim = primitive_scale(k[0]);
    CHECK(prim[0] * Laurent(-1) == prim[1] * q(1));
    Laurent g = lgcd(prim[0], prim[1]);
    CHECK(g.is_one());
}

TEST_CASE("kernel vectors satisfy Mv = 0 and dimensions add up") {
    Rng rng(3);
    for (int it = 0; it < 60; ++it) {
        std::size_t rows = static_cast<std::size_t>(rng.range(1, 4));
        std::size_t cols = static_cast<std::size_t>(rng.range(1, 4));
        Matrix M = random_matrix(rng, rows, cols);
        auto k = matrix_kernel(M);
        for (const auto& v : k) CHECK(kills(M, v));
        // Exact nullity plus rank at the generic point q = 5/7 is the column count.
        CHECK(k.size() + rank_at(M, ratq(5, 7)) == cols);
    }
}

TEST_CASE("rectangular kernels") {
    // One equation, three unknowns: x + q y + q^2 z = 0.
    Matrix M{{RatFn(1), RatFn(q(1)), RatFn(q(2))}};
    auto k = matrix_kernel(M);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(kills(M, v));

    // Overdetermined but consistent rank 1.
    Matrix T{{RatFn(q(1))}, {RatFn(q(2))}, {RatFn(1)}};
    CHECK(matrix_kernel(T).empty());
    CHECK(rank_at(T, ratq(5, 7)) == 1);
}

TEST_CASE("primitive scaling clears denominators and content") {
    std::vector<RatFn> v{RatFn(Laurent(1), Laurent(1) + q(2)), RatFn(q(-3))};
    auto w = primitive_scale(v);
    // Same line: w = c * v for a scalar c, checked by cross products.
    CHECK(RatFn(w[0]) * v[1] == RatFn(w[1]) * v[0]);
    CHECK(!w[0].zero());
    CHECK(std::min(w[0].lo(), w[1].lo()) == 0);
    CHECK(w[0].at(w[0].hi()) == 1);
}

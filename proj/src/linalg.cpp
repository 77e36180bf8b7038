#include "qfock/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace qfock {

namespace {

// Pivot choice: fewest stored terms, ties broken by position. Keeps the
// fraction-free intermediate entries small and the elimination deterministic.
bool better_pivot(const Laurent& cand, std::size_t ci, std::size_t cj, const Laurent* best,
                  std::size_t bi, std::size_t bj) {
    if (best == nullptr) return true;
    if (cand.size() != best->size()) return cand.size() < best->size();
    if (ci != bi) return ci < bi;
    return cj < bj;
}

}  // namespace

std::vector<std::vector<RatFn>> matrix_kernel(const Matrix& M) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows == 0 ? 0 : M[0].size();
    for (const auto& r : M)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    if (cols == 0) return {};

    // Clear denominators row by row; a row scale does not change the kernel.
    std::vector<std::vector<Laurent>> A(rows, std::vector<Laurent>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Laurent mult(1);
        for (std::size_t j = 0; j < cols; ++j)
            if (!M[i][j].is_poly()) mult *= M[i][j].den();
        for (std::size_t j = 0; j < cols; ++j)
            A[i][j] = M[i][j].num() * divexact(mult, M[i][j].den());
    }

    std::vector<std::size_t> colp(cols);
    std::iota(colp.begin(), colp.end(), 0);

    Laurent prev(1);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < rows && k < cols; ++k) {
        const Laurent* best = nullptr;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const Laurent& e = A[i][colp[j]];
                if (!e.zero() && better_pivot(e, i, j, best, bi, bj)) {
                    best = &e;
                    bi = i;
                    bj = j;
                }
            }
        if (best == nullptr) break;
        std::swap(A[k], A[bi]);
        std::swap(colp[k], colp[bj]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                A[i][colp[j]] =
                    divexact(A[k][colp[k]] * A[i][colp[j]] - A[i][colp[k]] * A[k][colp[j]], prev);
            A[i][colp[k]] = Laurent();
        }
        prev = A[k][colp[k]];
        ++rank;
    }

    // Rows 0..rank-1 are upper triangular in permuted columns; solve for the
    // pivot variables with one free variable set to 1 per kernel vector.
    std::vector<std::vector<RatFn>> basis;
    for (std::size_t f = rank; f < cols; ++f) {
        std::vector<RatFn> xp(cols);
        xp[f] = RatFn(1);
        for (std::size_t i = rank; i-- > 0;) {
            RatFn acc;
            for (std::size_t j = i + 1; j < cols; ++j)
                if (!xp[j].zero() && !A[i][colp[j]].zero()) acc += RatFn(A[i][colp[j]]) * xp[j];
            xp[i] = -(acc / RatFn(A[i][colp[i]]));
        }
        std::vector<RatFn> x(cols);
        for (std::size_t j = 0; j < cols; ++j) x[colp[j]] = xp[j];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank_at(const Matrix& M, const Rat& x) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows == 0 ? 0 : M[0].size();
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) A[i][j] = M[i][j].eval(x);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && A[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[rank], A[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (A[i][col] == 0) continue;
            Rat f = A[i][col] / A[rank][col];
            for (std::size_t j = col; j < cols; ++j) A[i][j] -= f * A[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<Laurent> primitive_scale(const std::vector<RatFn>& v) {
    std::vector<Laurent> w(v.size());
    Laurent mult(1);
    for (const auto& e : v)
        if (!e.zero() && !e.is_poly()) mult *= e.den();
    bool any = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].zero()) continue;
        w[i] = v[i].num() * divexact(mult, v[i].den());
        any = true;
    }
    if (!any) return w;
    Laurent g;
    long mlo = 0;
    bool first = true;
    for (const auto& e : w) {
        if (e.zero()) continue;
        g = lgcd(g, e);
        mlo = first ? e.lo() : std::min(mlo, e.lo());
        first = false;
    }
    for (auto& e : w)
        if (!e.zero()) e = divexact(e, g);
    // Re-anchor exponents and make the first nonzero entry's top coefficient 1.
    mlo = 0;
    first = true;
    Rat lead(1);
    for (const auto& e : w) {
        if (e.zero()) continue;
        if (first) {
            mlo = e.lo();
            first = false;
        } else {
            mlo = std::min(mlo, e.lo());
        }
    }
    for (const auto& e : w)
        if (!e.zero()) {
            lead = e.at(e.hi());
            break;
        }
    for (auto& e : w)
        if (!e.zero()) e = divexact(e, Laurent::term(lead, mlo));
    return w;
}

}  // namespace qfock

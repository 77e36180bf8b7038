#pragma once

#include <map>
#include <vector>

#include "qfock/evalmod.hpp"
#include "qfock/report.hpp"
#include "qfock/rng.hpp"

namespace qfock {

// Finite tensor power of the evaluation module: a sparse linear combination
// of length-N index tuples. The quantum algebra acts through the iterated
// coproduct on the left; the affine Hecke algebra acts on the right.
struct TensorVec {
    int n = 2;
    int N = 1;
    std::map<std::vector<long>, Laurent> terms;

    void add(const std::vector<long>& w, const Laurent& c);
    bool zero() const { return terms.empty(); }

    TensorVec& operator+=(const TensorVec& o);
    TensorVec& operator-=(const TensorVec& o);
    friend TensorVec operator+(TensorVec a, const TensorVec& b) { return a += b; }
    friend TensorVec operator-(TensorVec a, const TensorVec& b) { return a -= b; }
    friend TensorVec operator*(const Laurent& c, TensorVec v);

    bool operator==(const TensorVec& o) const {
        return n == o.n && N == o.N && terms == o.terms;
    }
    bool operator!=(const TensorVec& o) const { return !(*this == o); }
};

TensorVec tensor_unit(int n, std::vector<long> w, Laurent c = Laurent(1));

// Left action of a generator through the iterated coproduct: for E_i the
// slot-k term carries K_i on the slots right of k, for F_i the inverse K_i
// on the slots left of k; d adds the slot degrees.
TensorVec coproduct_action(const Gen& g, const TensorVec& v);

// Right action of T_i on adjacent slots i, i+1 (1-based); divided
// differences are expanded into finitely many monomials.
TensorVec hecke_T(int i, const TensorVec& v);
TensorVec hecke_Tinv(int i, const TensorVec& v);

// Right action of y_j^c: slot j index shifts by c*n.
TensorVec hecke_y(int j, long c, const TensorVec& v);

// Central element sum_k y_k^{-a} at finite N.
TensorVec tensor_B(long a, const TensorVec& v);

// Sum of T_sigma over all permutations; N <= 6.
TensorVec antisymmetrize(const TensorVec& v);

// prod_{m=1..N} (1-q^{2m})/(1-q^2), the quasi-idempotent scalar.
Laurent antisym_scalar(int N);

enum class Membership { image, kernel, mixed };
Membership split_membership(const TensorVec& v);

TensorVec random_tensor(Rng& rng, int n, int N, int max_terms = 2, long lo = -6, long hi = 6);

Report verify_hecke_relations(int n, int N, int samples, Rng& rng);
Report verify_centrality(int n, int N, long a, int samples, Rng& rng);
Report verify_intertwining(int n, int N, int samples, Rng& rng);

}  // namespace qfock

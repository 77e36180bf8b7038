#pragma once

#include "qfock/fock.hpp"
#include "qfock/report.hpp"

namespace qfock {

// Generator action on Fock vectors. The head carries the iterated coproduct;
// the implicit tail contributes the vacuum rules: a right K_i factor for E_i,
// and for F_i one creation term when i matches the tail charge. The result
// does not depend on where the word is truncated.
FockVec act(const Gen& g, const FockVec& v);

// Composition, rightmost factor first.
FockVec act_word(const std::vector<Gen>& word, const FockVec& v);

// Quantized integer [k] = (q^k - q^{-k})/(q - q^{-1}).
Laurent qint(long k);

// Chevalley relations, Serre relations (cubic for n >= 3, quartic for n = 2),
// the K conjugations, and the degree-operator brackets, on random vectors.
Report verify_defining_relations(int n, int samples, Rng& rng);

// Exact basis of the space of vectors of weight (kexp of the charge-m vacuum,
// ddeg = D_m - a) killed by every E_i. Its dimension is the partition number
// p(a).
std::vector<FockVec> singular_vectors(int n, long m, long a);

}  // namespace qfock

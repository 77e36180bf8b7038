#pragma once

#include <utility>
#include <vector>

#include "qfock/laurent.hpp"

namespace qfock {

// Rank parameter of the algebra; every index computation reduces mod n.
void check_rank(int n);

// Residue of m normalized to {0, ..., n-1}.
int ires(long m, int n);

// u_m = z^a v_j with m = j - a*n and 1 <= j <= n, uniquely.
struct ZV {
    int j;
    long a;
};
ZV decompose(long m, int n);

enum class GenKind { E, F, K, Kinv, D };

struct Gen {
    GenKind kind;
    int i = 0;  // ignored for D
};

// Throws unless n is a valid rank and the generator index is in range.
void check_gen(const Gen& g, int n);

// Exponent of the K_i eigenvalue on u_m: delta(m = i) - delta(m = i+1) mod n.
int kexp_u(int i, long m, int n);

// Single-factor action on the basis vector u_m; at most one term.
// E_i u_m = u_{m-1} iff m-1 = i, F_i u_m = u_{m+1} iff m = i (mod n),
// K_i u_m = q^{kexp} u_m, d u_m = a u_m.
std::vector<std::pair<long, Laurent>> gen_on_u(const Gen& g, long m, int n);

}  // namespace qfock

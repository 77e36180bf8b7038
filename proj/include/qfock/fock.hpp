#pragma once

#include <map>
#include <vector>

#include "qfock/evalmod.hpp"
#include "qfock/laurent.hpp"
#include "qfock/report.hpp"
#include "qfock/rng.hpp"

namespace qfock {

// Raised when an operation mixes incompatible vectors (charges, ranks).
struct semantic_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Term order for canonical heads: descending lexicographic, a strict prefix
// before its extensions.
struct HeadLess {
    bool operator()(const std::vector<long>& a, const std::vector<long>& b) const {
        std::size_t k = 0;
        while (k < a.size() && k < b.size()) {
            if (a[k] != b[k]) return a[k] > b[k];
            ++k;
        }
        return a.size() < b.size();
    }
};

// Element of the charge-m semi-infinite wedge space. Each key is a canonical
// head: strictly decreasing indices, trailing entries that coincide with the
// vacuum tail u_m, u_{m-1}, ... removed. The vacuum itself is the empty head.
struct FockVec {
    int n = 2;
    long charge = 0;
    std::map<std::vector<long>, Laurent, HeadLess> terms;

    void add(const std::vector<long>& head, const Laurent& c);
    bool zero() const { return terms.empty(); }

    FockVec& operator+=(const FockVec& o);
    FockVec& operator-=(const FockVec& o);
    friend FockVec operator+(FockVec a, const FockVec& b) { return a += b; }
    friend FockVec operator-(FockVec a, const FockVec& b) { return a -= b; }
    friend FockVec operator*(const Laurent& c, FockVec v);

    bool operator==(const FockVec& o) const {
        return n == o.n && charge == o.charge && terms == o.terms;
    }
    bool operator!=(const FockVec& o) const { return !(*this == o); }
};

FockVec fock_zero(int n, long charge);
FockVec vacuum(int n, long charge);
// Canonical basis wedge; the head must be strictly decreasing with
// nonnegative partition offsets (checked).
FockVec basis_wedge(int n, long charge, const std::vector<long>& head);

// Normal ordering: rewrites an arbitrary finite wedge word (over the implicit
// vacuum tail of the given charge) into the canonical basis. The zero vector
// is a legitimate result (repeated factors).
FockVec straighten(const std::vector<long>& word, long charge, int n);

// u_a wedged on the left of a charge m-1 vector; result has charge m.
FockVec wedge_prepend(long a, const FockVec& v);

// All canonical heads of the given charge whose partition has size s,
// in canonical term order; the count is the partition number p(s).
std::vector<std::vector<long>> enumerate_basis(long charge, long s);

struct Weight {
    std::vector<long> kexp;  // exponent of the K_i eigenvalue, i = 0..n-1
    long ddeg = 0;           // d eigenvalue
    bool operator==(const Weight& o) const = default;
};

// Weight of a basis wedge: vacuum weight plus per-slot corrections.
Weight weight_of(const std::vector<long>& head, long charge, int n);

// Degree D_m of the charge-m vacuum, normalized by D_0 = 0 and
// D_m - D_{m-1} = a(m) with u_m = z^{a(m)} v_j.
long vacuum_degree(long m, int n);

// Partition attached to a head at the given charge.
std::vector<long> head_partition(const std::vector<long>& head, long charge);

FockVec random_fock(Rng& rng, int n, long charge, long max_size = 4, int max_terms = 2);

// At q = 1 straightening degenerates to the signed sort of the window;
// words with a repeated letter go to zero.
Report verify_classical(int n, int samples, Rng& rng);

}  // namespace qfock

#pragma once

#include "qfock/heis.hpp"
#include "qfock/series.hpp"

namespace qfock {

// Two-site overlap series: coefficient b is the vacuum component of the
// normal ordering of the pair word (m+1-nb, m+nb) at charge m+1.
Series omega_two_point(int n, long m, int order);

// Truncated product form: factor k contributes
// (1 - q^{2n+2+2nk} w) / (1 - q^{2n+2nk} w), k = 0..kmax.
Series phi_two_point(int n, int order, int kmax);

// True when raising kmax by one changes no coefficient at or below the
// q-degree window: the truncation is certified for that window.
bool phi_stable(int n, int order, int kmax, long window);

// Degree-s layer of the creation exponential exp(sum_b b_{-b} w^b / gamma_b).
HPoly<RatFn> creation_layer(int n, long s);

// Coefficients of the annihilation-creation overlap computed in the
// polynomial module; closed form exp(-sum_b w^b / gamma_b).
std::vector<RatFn> xi_two_point(int n, int order);

// omega = phi * xi coefficientwise, up to residuals above the q-degree
// window coming from the phi truncation.
Report verify_factorization(int n, long m, int order, int kmax, long window);

// log(omega/phi) mode a recovers -1/gamma_a up to the window, with one
// consistent global sign.
Report extract_gamma(int n, long m, int order, int kmax, long window);

// Xi_k = sum_{i-j=k} (multiply by layer i) o (annihilation layer j);
// [b_a, Xi_k] = Xi_{k-a} on polynomials of degree <= max_deg, compared up
// to the exactness degree of the truncation.
Report verify_xi_commutation(int n, int order, long max_k, long max_a, long max_deg);

}  // namespace qfock

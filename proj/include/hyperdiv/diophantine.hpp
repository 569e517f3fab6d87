#pragma once

#include <functional>

#include "hyperdiv/vandercorput.hpp"

namespace hyperdiv {

enum class CountMethod { brute, sorted };

// One proximity-count query. count_b3 and count_b4 read L; count_b5 reads
// M, N, and the shift delta. Every counter compares normalized power
// differences against the window 1/X.
struct CountQuery {
    u64 L = 1;
    u64 M = 1, N = 1;
    double X = 1.0;
    double beta = 1.0;
    double delta = 0.0;
    CountMethod method = CountMethod::sorted;
};

// count: hits with |difference| <= 1/X on exactly computed doubles.
// fuzz_count: hits gained when the window widens from 1/X - 2^-48 to
// 1/X + 2^-48, reported separately so boundary ambiguity stays visible.
struct CountResult {
    u64 count = 0;
    u64 fuzz_count = 0;
};

// Quadruples (l1,l2,l3,l4) in (L,2L]^4 with
// |l1^beta + l2^beta - l3^beta - l4^beta| / L^beta <= 1/X.
// brute is O(L^4), L <= 64; sorted is O(L^2 log L) over pairwise sums,
// L <= 10^4. Violations raise capacity errors.
CountResult count_b3(const CountQuery& q);

// Pairs (l1,l2) in (L,2L]^2 with |L^beta/l1^beta - L^beta/l2^beta| <= 1/X.
// brute is O(L^2), L <= 10^3; sorted is O(L log L), L <= 10^7.
CountResult count_b4(const CountQuery& q);

// Quadruples (m1,n1,m2,n2) in ((M,2M] x (N,2N])^2 with
// |(m1 n1 + delta)^beta - (m2 n2 + delta)^beta| / (MN)^beta <= 1/X.
// Requires |delta| <= M*N so every base stays positive. brute needs
// M*N <= 300; sorted sorts the M*N values and needs M*N <= 10^6.
CountResult count_b5(const CountQuery& q);

// Sum over n in (N, 2N] of min{Q, 1/||f(n)||}, where ||.|| is the distance
// to the nearest integer and a term with ||f(n)|| = 0 contributes Q. The
// report carries sum_modulus = the exact sum, bound_value = the envelope
// (P+1)(Q + 1/Delta) log(2 + 1/Delta), and their ratio. delta_lower is a
// positive lower bound for |f'| on the range and p_bound an upper bound for
// |f|; a nonpositive delta_lower is a domain error.
BoundCheckReport min_reciprocal_sum(const std::function<double(double)>& f, u64 N,
                                    double Q, double delta_lower, double p_bound);

// Monomial-phase convenience: derives delta_lower and p_bound from the
// endpoint values of |f'| and |f|, both monotone for monomial phases.
BoundCheckReport min_reciprocal_sum(const PhaseSpec& phase, u64 N, double Q);

}  // namespace hyperdiv

#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hyperdiv/divisor.hpp"

namespace hyperdiv {

using cplx = std::complex<double>;

// Outcome of one empirical inequality check. ratio = sum_modulus/bound_value;
// the bound formulas carry implied constant 1, so thresholds live in callers.
struct BoundCheckReport {
    double sum_modulus = 0.0;
    double bound_value = 0.0;
    double ratio = 0.0;
    std::string params;  // echo of the inputs, human readable
};

using Coeff1D = std::function<cplx(u64)>;
using Coeff2D = std::function<cplx(u64, u64)>;

// Perturbed 3D exponential sum over dyadic ranges h in (H,2H], m in (M,2M],
// n in (N,2N] with phase X ((mn+delta)/(MN))^beta (h/H)^alpha.
// Empty coefficient functions mean identically 1.
struct ExpSumSpec {
    u64 H = 1, M = 1, N = 1;
    double X = 2.0;
    double alpha = 1.0;
    double beta = 1.0;
    double delta = 0.0;
    Coeff1D coeff_b;  // |b(h)| <= 1
    Coeff2D coeff_a;  // |a(m,n)| <= 1

    // Sweep-driver invariants: X > 1 and |delta| <= M*N. Evaluators do not
    // call this (conjugation tests legitimately negate X).
    void validate() const;
};

// Budget shared by the direct evaluators; H*M*N above it raises CapacityError.
inline constexpr u64 kTermBudget = 1000000000;

// S = sum_{m,n} a(m,n) sum_h b(h) e(phase). Coefficient moduli above 1+1e-12
// raise DomainError, as does a nonpositive power base mn+delta.
cplx eval_S(const ExpSumSpec& spec);

// Max over contiguous subintervals of |sum z_n|: the diameter of the prefix-sum
// point set, via convex hull + rotating calipers, O(len log len). Empty input
// raises DomainError.
double max_partial_sum(const std::vector<cplx>& z);

// S* = sum_{m,n} max_partial_sum of the coefficient-free inner h-sequence.
double eval_S_star(const ExpSumSpec& spec);

// Quadruple sum sum_{h~H} (1/h) sum_{d1~D1} sum_{d2~D2} sum_{l~L}
// e(h x / (l (d1 d2 + delta))) with delta in {0,1} and x > 1.
cplx eval_frak_S(double x, u64 d1, u64 d2, u64 l, u64 h, int delta);

// Three-dimensional sum with the maximal partial sum on the inner m-range:
// sum_{h~H} sum_{n~N} max_partial_sum(m -> e(X m^a h^b n^c / (M^a H^b N^c))).
double eval_rs3d(u64 h, u64 m, u64 n, double x, double alpha, double beta, double gamma);

enum class BoundKind { thm_S, thm_Sstar, proposition, rs3d };

// Parameter bundle for theoretical_bound; each kind reads its own fields:
//   thm_S, thm_Sstar, rs3d: H, M, N, X
//   proposition:            x, H, D (hypothesis checked with L; default 1)
struct BoundParams {
    double H = 0.0, M = 0.0, N = 0.0, X = 0.0;
    double x = 0.0, D = 0.0, L = 1.0;
};

// The literal right-hand sides with implied constant 1:
//   thm_S:       (HMN)^{1+eps} [(X/(MNH^2))^{1/4} + (MN)^{-1/4} + H^{-1/2} + X^{-1/2}]
//   thm_Sstar:   (HMN)^{1+eps} [(X/(MNH^2))^{1/4} + H^{-1/2} + 1/X]
//   rs3d:        (HMN)^{1+eps} [(X/(HNM^2))^{1/4} + M^{-1/2} + 1/X]
//   proposition: x^eps (x^{11/30} H^{1/4} D^{3/8} + x^{7/30} D^{3/4}
//                + x^{23/60} H^{1/2} D^{1/4} + x^{4/15} H^{1/2} D^{1/2}
//                + x^{-1/4} H^{-1/2} D^{5/4} + D + x^{-2/5} H D^{3/2})
// Nonpositive required parameters (and, for proposition, a violated hypothesis
// x > 1, 1 <= D < x, L^2 D <= x) raise DomainError.
double theoretical_bound(BoundKind kind, const BoundParams& p, double epsilon);

// One grid point of a bound sweep. Phase exponents default to 1/2 so both
// side-condition readings (exponent product neither 0 nor 1) hold; gamma is
// read only by rs3d, delta only by thm_S / thm_Sstar.
struct SweepPoint {
    u64 H = 1, M = 1, N = 1;
    double X = 10.0;
    double alpha = 0.5, beta = 0.5, gamma = 0.5;
    double delta = 1.0;
};

struct SweepResult {
    std::vector<BoundCheckReport> reports;  // grid order, skipped points omitted
    double max_ratio = 0.0;
    std::vector<std::string> errors;  // one entry per skipped point
};

// Evaluates |sum|/bound per grid point. thm_S draws random unimodular
// coefficients from mix_seed(seed, point index) so results are reproducible
// for any thread count; thm_Sstar and rs3d are coefficient-free by
// definition. Points violating a side condition or the term budget are
// skipped and recorded. proposition is not sweepable (DomainError).
SweepResult bound_sweep(BoundKind kind, const std::vector<SweepPoint>& grid,
                        double epsilon, u64 seed, unsigned threads = 1);

// Bilinear form S = sum_k sum_l a_k b_l e(X u_k v_l) checked against
// sqrt(X B1 B2) where B1 = #{(k1,k2): |u_k1 - u_k2| <= 1/X} and B2 likewise
// for v (sorted two-pointer counts). Requires X >= 1, nonempty sequences,
// matching coefficient lengths, |a|,|b| <= 1.
BoundCheckReport double_large_sieve_check(const std::vector<double>& u,
                                          const std::vector<double>& v,
                                          const std::vector<cplx>& a,
                                          const std::vector<cplx>& b, double X);

// Maximal-inequality check: LHS = max_partial_sum(z)^k against
// RHS = (1+log N)^{k-1} integral_{-1/2}^{1/2} |sum z_n e(nt)|^k L(t) dt,
// L(t) = min{N, 1/(2|t|)}, by midpoint quadrature (uniform core on
// [0, 1/(2N)], geometric octaves to 1/2, both signs). k >= 1 and
// quadrature_points >= 1000 required.
BoundCheckReport maximal_inequality_check(const std::vector<cplx>& z, double k,
                                          int quadrature_points);

}  // namespace hyperdiv

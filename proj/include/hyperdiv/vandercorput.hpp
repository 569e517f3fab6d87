#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hyperdiv/expsum.hpp"

namespace hyperdiv {

// Monomial phase f(x) = X*(x/M)^alpha examined on a subinterval of [M, 2M],
// with an optional weight g bounded by weight_scale (empty weight means 1).
struct PhaseSpec {
    double alpha = 2.0;
    double X = 1.0;  // > 0
    u64 M = 1;
    std::function<double(double)> weight;  // g; empty means identically 1
    double weight_scale = 1.0;             // U, an upper bound for |g|

    double f(double x) const;
    double fprime(double x) const;
    double fsecond(double x) const;
    void validate() const;  // X > 0, M >= 1
};

// Flatness check: when the distance from fprime(n) to the nearest integer is
// at least lambda at every integer n of [n_lo, n_hi], the phase sum stays
// within 1/lambda. sum_modulus = |sum e(f(n))|, bound_value = 1/lambda,
// ratio = sum_modulus * lambda. lambda outside (0, 1/2] or an empty range is
// a domain error; a derivative too close to an integer is a precondition
// error naming the offending point.
BoundCheckReport kusmin_landau_ratio(const std::function<double(double)>& f,
                                     const std::function<double(double)>& fprime,
                                     i64 n_lo, i64 n_hi, double lambda);

// Stationary abscissas x_r solving f'(x_r) = r in closed form, one per
// integer r in the derivative range over [a, b]. When alpha*(alpha-1) < 0 the
// negated phase's derivative range is enumerated, matching b_process_compare.
std::vector<double> stationary_points(const PhaseSpec& phase, double a, double b);

struct BProcessResult {
    cplx lhs;             // direct sum of g(n) e(f(n)), endpoint terms halved
    cplx main_term;       // stationary-phase sum, endpoint terms halved
    double error_budget;  // the two remainder terms evaluated with constant 1
    double discrepancy;   // |lhs - main_term|
};

// Second-derivative transform comparison on [a, b] within [M, 2M]:
//   lhs  = sum*_{a<=n<=b} g(n) e(f(n))
//   main = sum*_{r in [f'(a), f'(b)]} g(x_r) e(f(x_r) - r x_r + 1/8) / sqrt(f''(x_r))
//   error_budget = U*(R(a)+R(b)) + U*(log(f'(b)-f'(a)+2) + M/T + T/M^2 + 1)
// where T = M^2 * min f'', R(mu) = min{M/sqrt(T), 1/||f'(mu)||} and 0 when
// ||f'(mu)|| = 0. Both sums halve terms landing exactly on an endpoint. For
// alpha*(alpha-1) < 0 the phase is negated internally and the results
// conjugated back, so lhs always reports the sum for f itself.
// alpha in {0, 1} (vanishing curvature) is a domain error.
BProcessResult b_process_compare(const PhaseSpec& phase, double a, double b);

// Parameters of the endpoint-dependence removal map for a monomial phase:
//   L  = floor(2^{-|alpha|-1} |alpha| X / M)
//   L1 = floor(2^{|alpha|+2}  |alpha| X / M)
//   rho(x) = (1-alpha) (L M / |alpha|)^{alpha/(alpha-1)} x^{1/(1-alpha)}
// L < 1 is a domain error (the scale ratio X/M is too small).
struct DependenceParams {
    u64 L = 0;
    u64 L1 = 0;
    std::function<double(double)> rho;
};

DependenceParams dependence_params(double alpha, double X, u64 M);

}  // namespace hyperdiv

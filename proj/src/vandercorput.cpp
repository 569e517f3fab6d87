#include "hyperdiv/vandercorput.hpp"

#include <cmath>
#include <sstream>

#include "hyperdiv/numeric.hpp"

namespace hyperdiv {

namespace {

double nearest_int_dist(double v) { return std::abs(v - std::round(v)); }

// Endpoint values within this of an integer are treated as exactly integral
// for the halved-term convention and for R(mu).
constexpr double kEndpointTol = 1e-9;

}  // namespace

// --- PhaseSpec ---

double PhaseSpec::f(double x) const {
    return X * std::pow(x / static_cast<double>(M), alpha);
}

double PhaseSpec::fprime(double x) const {
    const double Md = static_cast<double>(M);
    return alpha * X / Md * std::pow(x / Md, alpha - 1.0);
}

double PhaseSpec::fsecond(double x) const {
    const double Md = static_cast<double>(M);
    return alpha * (alpha - 1.0) * X / (Md * Md) * std::pow(x / Md, alpha - 2.0);
}

void PhaseSpec::validate() const {
    if (!(X > 0.0)) throw DomainError("PhaseSpec: X must be positive");
    if (M == 0) throw DomainError("PhaseSpec: M must be positive");
}

// --- Kusmin-Landau ---

BoundCheckReport kusmin_landau_ratio(const std::function<double(double)>& f,
                                     const std::function<double(double)>& fprime,
                                     i64 n_lo, i64 n_hi, double lambda) {
    if (!(lambda > 0.0 && lambda <= 0.5)) {
        throw DomainError("kusmin_landau_ratio: lambda must lie in (0, 1/2]");
    }
    if (n_lo > n_hi) throw DomainError("kusmin_landau_ratio: empty range");
    if (!f || !fprime) throw DomainError("kusmin_landau_ratio: phase callables required");
    const u64 count = static_cast<u64>(n_hi - n_lo) + 1;
    if (count > kTermBudget) throw CapacityError("kusmin_landau_ratio: term budget exceeded");
    for (i64 n = n_lo; n <= n_hi; ++n) {
        const double dist = nearest_int_dist(fprime(static_cast<double>(n)));
        if (dist + 1e-12 < lambda) {
            std::ostringstream msg;
            msg << "kusmin_landau_ratio: derivative distance " << dist
                << " below lambda at n = " << n;
            throw PreconditionError(msg.str());
        }
    }
    CompensatedComplexSum s;
    for (i64 n = n_lo; n <= n_hi; ++n) {
        s.add(unit_phase(f(static_cast<double>(n))));
    }
    BoundCheckReport rep;
    rep.sum_modulus = std::abs(s.value());
    rep.bound_value = 1.0 / lambda;
    rep.ratio = rep.sum_modulus * lambda;
    std::ostringstream ps;
    ps << "n_lo=" << n_lo << " n_hi=" << n_hi << " lambda=" << lambda;
    rep.params = ps.str();
    return rep;
}

// --- second-derivative transform ---

namespace {

void check_bproc_args(const PhaseSpec& phase, double a, double b) {
    phase.validate();
    if (phase.alpha == 0.0 || phase.alpha == 1.0) {
        throw DomainError("b_process_compare: phase curvature vanishes");
    }
    const double Md = static_cast<double>(phase.M);
    if (!(a >= Md && b <= 2.0 * Md && a < b)) {
        throw DomainError("b_process_compare: need M <= a < b <= 2M");
    }
}

// Solves sgn * f'(x) = r for the monomial phase. The derivative keeps one
// sign on [M, 2M], so enumerated r never includes 0 and the base is positive.
double solve_stationary(const PhaseSpec& phase, double sgn, double r) {
    const double Md = static_cast<double>(phase.M);
    const double base = sgn * r * Md / (phase.alpha * phase.X);
    return Md * std::pow(base, 1.0 / (phase.alpha - 1.0));
}

}  // namespace

std::vector<double> stationary_points(const PhaseSpec& phase, double a, double b) {
    check_bproc_args(phase, a, b);
    const double sgn = phase.alpha * (phase.alpha - 1.0) < 0.0 ? -1.0 : 1.0;
    const double ra = sgn * phase.fprime(a);
    const double rb = sgn * phase.fprime(b);
    const i64 rlo = static_cast<i64>(std::ceil(ra - kEndpointTol));
    const i64 rhi = static_cast<i64>(std::floor(rb + kEndpointTol));
    std::vector<double> xs;
    for (i64 r = rlo; r <= rhi; ++r) {
        xs.push_back(solve_stationary(phase, sgn, static_cast<double>(r)));
    }
    return xs;
}

BProcessResult b_process_compare(const PhaseSpec& phase, double a, double b) {
    check_bproc_args(phase, a, b);
    const bool flip = phase.alpha * (phase.alpha - 1.0) < 0.0;
    const double sgn = flip ? -1.0 : 1.0;
    const double Md = static_cast<double>(phase.M);
    auto g = [&](double x) { return phase.weight ? phase.weight(x) : 1.0; };
    const double U = phase.weight_scale;

    const i64 nlo = static_cast<i64>(std::ceil(a));
    const i64 nhi = static_cast<i64>(std::floor(b));
    if (nhi >= nlo && static_cast<u64>(nhi - nlo) + 1 > kTermBudget) {
        throw CapacityError("b_process_compare: term budget exceeded");
    }
    CompensatedComplexSum direct;
    for (i64 n = nlo; n <= nhi; ++n) {
        const double nd = static_cast<double>(n);
        double w = g(nd);
        if (nd == a) w *= 0.5;
        if (nd == b) w *= 0.5;
        direct.add(w * unit_phase(sgn * phase.f(nd)));
    }

    // curvature of the (possibly negated) phase is positive and monotone, so
    // its minimum sits at an endpoint
    const double fpp_a = sgn * phase.fsecond(a);
    const double fpp_b = sgn * phase.fsecond(b);
    const double T = Md * Md * std::min(fpp_a, fpp_b);
    const double ra = sgn * phase.fprime(a);
    const double rb = sgn * phase.fprime(b);

    const i64 rlo = static_cast<i64>(std::ceil(ra - kEndpointTol));
    const i64 rhi = static_cast<i64>(std::floor(rb + kEndpointTol));
    if (rhi >= rlo && static_cast<u64>(rhi - rlo) + 1 > kTermBudget) {
        throw CapacityError("b_process_compare: stationary budget exceeded");
    }
    CompensatedComplexSum main;
    for (i64 r = rlo; r <= rhi; ++r) {
        const double rd = static_cast<double>(r);
        const double xr = solve_stationary(phase, sgn, rd);
        double w = g(xr) / std::sqrt(sgn * phase.fsecond(xr));
        if (std::abs(rd - ra) <= kEndpointTol) w *= 0.5;
        if (std::abs(rd - rb) <= kEndpointTol) w *= 0.5;
        main.add(w * unit_phase(sgn * phase.f(xr) - rd * xr + 0.125));
    }

    auto remainder = [&](double mu) {
        const double dist = nearest_int_dist(sgn * phase.fprime(mu));
        if (dist <= kEndpointTol) return 0.0;
        return std::min(Md / std::sqrt(T), 1.0 / dist);
    };
    const double budget =
        U * (remainder(a) + remainder(b)) +
        U * (std::log(rb - ra + 2.0) + Md / T + T / (Md * Md) + 1.0);

    BProcessResult out;
    out.lhs = flip ? std::conj(direct.value()) : direct.value();
    out.main_term = flip ? std::conj(main.value()) : main.value();
    out.error_budget = budget;
    out.discrepancy = std::abs(out.lhs - out.main_term);
    return out;
}

// --- endpoint-dependence removal parameters ---

DependenceParams dependence_params(double alpha, double X, u64 M) {
    if (alpha == 0.0 || alpha == 1.0) {
        throw DomainError("dependence_params: alpha must avoid {0, 1}");
    }
    if (!(X > 0.0)) throw DomainError("dependence_params: X must be positive");
    if (M == 0) throw DomainError("dependence_params: M must be positive");
    const double aa = std::abs(alpha);
    const double scale = aa * X / static_cast<double>(M);
    const double l = std::floor(std::exp2(-aa - 1.0) * scale);
    if (l < 1.0) throw DomainError("dependence_params: scale ratio X/M too small");
    const double l1 = std::floor(std::exp2(aa + 2.0) * scale);
    if (!(l1 < 9.2e18)) throw CapacityError("dependence_params: parameter overflow");
    DependenceParams out;
    out.L = static_cast<u64>(l);
    out.L1 = static_cast<u64>(l1);
    const double lm = l * static_cast<double>(M) / aa;
    const double abar = alpha / (alpha - 1.0);
    out.rho = [alpha, lm, abar](double x) {
        return (1.0 - alpha) * std::pow(lm, abar) * std::pow(x, 1.0 / (1.0 - alpha));
    };
    return out;
}

}  // namespace hyperdiv

#include "hyperdiv/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "hyperdiv/numeric.hpp"

namespace hyperdiv {

namespace {

constexpr double kFuzz = 0x1p-48;

double nearest_int_dist(double v) { return std::abs(v - std::round(v)); }

void check_window(const CountQuery& q) {
    if (!(q.X > 0.0)) throw DomainError("count query: X must be positive");
    if (q.beta == 0.0) throw DomainError("count query: beta must be nonzero");
}

// Ordered pairs (i,j), diagonal included, with |v_i - v_j| <= win over a
// sorted vector. A negative window admits nothing.
u64 pairs_within(const std::vector<double>& vals, double win) {
    if (win < 0.0) return 0;
    const std::size_t n = vals.size();
    u64 count = 0;
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (vals[i] - vals[lo] > win) ++lo;
        while (hi < n && vals[hi] - vals[i] <= win) ++hi;
        count += hi - lo;
    }
    return count;
}

CountResult from_sorted(std::vector<double>& vals, double w) {
    std::sort(vals.begin(), vals.end());
    CountResult out;
    out.count = pairs_within(vals, w);
    out.fuzz_count = pairs_within(vals, w + kFuzz) - pairs_within(vals, w - kFuzz);
    return out;
}

CountResult from_brute(const std::vector<double>& vals, double w) {
    CountResult out;
    u64 wide = 0, narrow = 0;
    const double lo = w - kFuzz, hi = w + kFuzz;
    for (double a : vals) {
        for (double b : vals) {
            const double d = std::abs(a - b);
            if (d <= w) ++out.count;
            if (d <= hi) ++wide;
            if (lo >= 0.0 && d <= lo) ++narrow;
        }
    }
    out.fuzz_count = wide - narrow;
    return out;
}

// power table for one dyadic range (B, 2B], normalized by B^beta
std::vector<double> power_table(u64 B, double beta) {
    std::vector<double> vals(B);
    const double Bd = static_cast<double>(B);
    for (u64 i = 0; i < B; ++i) {
        vals[i] = std::pow(static_cast<double>(B + 1 + i) / Bd, beta);
    }
    return vals;
}

}  // namespace

CountResult count_b3(const CountQuery& q) {
    check_window(q);
    if (q.L == 0) throw DomainError("count_b3: L must be positive");
    if (q.method == CountMethod::brute && q.L > 64) {
        throw CapacityError("count_b3: brute method needs L <= 64");
    }
    if (q.L > 10000) throw CapacityError("count_b3: sorted method needs L <= 10^4");
    const double w = 1.0 / q.X;
    const auto elem = power_table(q.L, q.beta);
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(q.L) * q.L);
    for (double a : elem) {
        for (double b : elem) sums.push_back(a + b);
    }
    if (q.method == CountMethod::brute) return from_brute(sums, w);
    return from_sorted(sums, w);
}

CountResult count_b4(const CountQuery& q) {
    check_window(q);
    if (q.L == 0) throw DomainError("count_b4: L must be positive");
    if (q.method == CountMethod::brute && q.L > 1000) {
        throw CapacityError("count_b4: brute method needs L <= 10^3");
    }
    if (q.L > 10000000) throw CapacityError("count_b4: sorted method needs L <= 10^7");
    const double w = 1.0 / q.X;
    const double Ld = static_cast<double>(q.L);
    std::vector<double> vals(q.L);
    for (u64 i = 0; i < q.L; ++i) {
        vals[i] = std::pow(Ld / static_cast<double>(q.L + 1 + i), q.beta);
    }
    if (q.method == CountMethod::brute) return from_brute(vals, w);
    return from_sorted(vals, w);
}

CountResult count_b5(const CountQuery& q) {
    check_window(q);
    if (q.M == 0 || q.N == 0) throw DomainError("count_b5: M and N must be positive");
    const double mn = static_cast<double>(q.M) * static_cast<double>(q.N);
    if (!(std::abs(q.delta) <= mn)) {
        throw DomainError("count_b5: |delta| must be <= M*N");
    }
    const u64 cells = (q.M <= kTermBudget / q.N) ? q.M * q.N : 0;
    if (q.method == CountMethod::brute && (cells == 0 || cells > 300)) {
        throw CapacityError("count_b5: brute method needs M*N <= 300");
    }
    if (cells == 0 || cells > 1000000) {
        throw CapacityError("count_b5: sorted method needs M*N <= 10^6");
    }
    const double w = 1.0 / q.X;
    std::vector<double> vals;
    vals.reserve(cells);
    for (u64 m = q.M + 1; m <= 2 * q.M; ++m) {
        for (u64 n = q.N + 1; n <= 2 * q.N; ++n) {
            const double base = static_cast<double>(m) * static_cast<double>(n) + q.delta;
            vals.push_back(std::pow(base / mn, q.beta));
        }
    }
    if (q.method == CountMethod::brute) return from_brute(vals, w);
    return from_sorted(vals, w);
}

BoundCheckReport min_reciprocal_sum(const std::function<double(double)>& f, u64 N,
                                    double Q, double delta_lower, double p_bound) {
    if (!f) throw DomainError("min_reciprocal_sum: phase callable required");
    if (N == 0) throw DomainError("min_reciprocal_sum: N must be positive");
    if (N > kTermBudget) throw CapacityError("min_reciprocal_sum: term budget exceeded");
    if (!(Q > 0.0)) throw DomainError("min_reciprocal_sum: Q must be positive");
    if (!(delta_lower > 0.0)) {
        throw DomainError("min_reciprocal_sum: derivative lower bound must be positive");
    }
    if (!(p_bound >= 0.0)) throw DomainError("min_reciprocal_sum: P must be nonnegative");
    CompensatedSum sum;
    for (u64 n = N + 1; n <= 2 * N; ++n) {
        const double dist = nearest_int_dist(f(static_cast<double>(n)));
        sum.add(dist == 0.0 ? Q : std::min(Q, 1.0 / dist));
    }
    BoundCheckReport rep;
    rep.sum_modulus = sum.value();
    rep.bound_value = (p_bound + 1.0) * (Q + 1.0 / delta_lower) *
                      std::log(2.0 + 1.0 / delta_lower);
    rep.ratio = rep.sum_modulus / rep.bound_value;
    std::ostringstream ps;
    ps << "N=" << N << " Q=" << Q << " Delta=" << delta_lower << " P=" << p_bound;
    rep.params = ps.str();
    return rep;
}

BoundCheckReport min_reciprocal_sum(const PhaseSpec& phase, u64 N, double Q) {
    phase.validate();
    if (N == 0) throw DomainError("min_reciprocal_sum: N must be positive");
    const double lo = static_cast<double>(N + 1);
    const double hi = 2.0 * static_cast<double>(N);
    const double delta_lower =
        std::min(std::abs(phase.fprime(lo)), std::abs(phase.fprime(hi)));
    const double p_bound = std::max(std::abs(phase.f(lo)), std::abs(phase.f(hi)));
    return min_reciprocal_sum([&phase](double x) { return phase.f(x); }, N, Q,
                              delta_lower, p_bound);
}

}  // namespace hyperdiv

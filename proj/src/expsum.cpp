#include "hyperdiv/expsum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "hyperdiv/numeric.hpp"

namespace hyperdiv {

namespace {

void check_ranges(u64 a, u64 b, u64 c, const char* who) {
    if (a == 0 || b == 0 || c == 0) {
        throw DomainError(std::string(who) + ": range sizes must be positive");
    }
    if (b > kTermBudget / a || c > kTermBudget / (a * b)) {
        throw CapacityError(std::string(who) + ": term budget exceeded");
    }
}

cplx checked_coeff(const cplx& v, const char* who) {
    if (std::abs(v) > 1.0 + 1e-12) {
        throw DomainError(std::string(who) + ": coefficient modulus exceeds 1");
    }
    return v;
}

// --- prefix-point geometry for the maximal partial sum ---

using Pt = std::array<double, 2>;

double cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double dist2(const Pt& a, const Pt& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

// Andrew monotone chain; pops collinear points, so the result is strictly
// convex and CCW. Degenerate inputs come back with 1 or 2 points.
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    std::vector<Pt> hull(2 * static_cast<std::size_t>(n));
    int t = 0;
    for (int i = 0; i < n; ++i) {
        while (t >= 2 && cross(hull[t - 2], hull[t - 1], pts[i]) <= 0.0) --t;
        hull[t++] = pts[i];
    }
    for (int i = n - 2, base = t + 1; i >= 0; --i) {
        while (t >= base && cross(hull[t - 2], hull[t - 1], pts[i]) <= 0.0) --t;
        hull[t++] = pts[i];
    }
    hull.resize(t - 1);
    return hull;
}

// Rotating calipers diameter over antipodal pairs.
double hull_diameter(const std::vector<Pt>& h) {
    const int n = static_cast<int>(h.size());
    if (n <= 1) return 0.0;
    if (n == 2) return std::sqrt(dist2(h[0], h[1]));
    double best = 0.0;
    int j = 1;
    for (int i = 0; i < n; ++i) {
        const int ni = (i + 1) % n;
        for (;;) {
            const int nj = (j + 1) % n;
            if (std::abs(cross(h[i], h[ni], h[nj])) > std::abs(cross(h[i], h[ni], h[j]))) {
                j = nj;
            } else {
                break;
            }
        }
        best = std::max({best, dist2(h[i], h[j]), dist2(h[ni], h[j])});
    }
    return std::sqrt(best);
}

}  // namespace

void ExpSumSpec::validate() const {
    if (H == 0 || M == 0 || N == 0) throw DomainError("ExpSumSpec: ranges must be positive");
    if (!(X > 1.0)) throw DomainError("ExpSumSpec: X must exceed 1");
    const double mn = static_cast<double>(M) * static_cast<double>(N);
    if (!(std::abs(delta) <= mn)) throw DomainError("ExpSumSpec: |delta| must be <= M*N");
}

cplx eval_S(const ExpSumSpec& s) {
    check_ranges(s.H, s.M, s.N, "eval_S");
    const double mn_scale = static_cast<double>(s.M) * static_cast<double>(s.N);
    std::vector<double> hpow(s.H);
    std::vector<cplx> bval(s.H);
    for (u64 i = 0; i < s.H; ++i) {
        const u64 h = s.H + 1 + i;
        hpow[i] = std::pow(static_cast<double>(h) / static_cast<double>(s.H), s.alpha);
        bval[i] = s.coeff_b ? checked_coeff(s.coeff_b(h), "eval_S") : cplx(1.0, 0.0);
    }
    CompensatedComplexSum acc;
    for (u64 m = s.M + 1; m <= 2 * s.M; ++m) {
        for (u64 n = s.N + 1; n <= 2 * s.N; ++n) {
            const double base = static_cast<double>(m) * static_cast<double>(n) + s.delta;
            if (!(base > 0.0)) throw DomainError("eval_S: power base mn + delta must be positive");
            const cplx a = s.coeff_a ? checked_coeff(s.coeff_a(m, n), "eval_S") : cplx(1.0, 0.0);
            const double mpow = s.X * std::pow(base / mn_scale, s.beta);
            CompensatedComplexSum inner;
            for (u64 i = 0; i < s.H; ++i) {
                inner.add(bval[i] * unit_phase(mpow * hpow[i]));
            }
            acc.add(a * inner.value());
        }
    }
    return acc.value();
}

double max_partial_sum(const std::vector<cplx>& z) {
    if (z.empty()) throw DomainError("max_partial_sum: empty sequence");
    std::vector<Pt> pts;
    pts.reserve(z.size() + 1);
    pts.push_back({0.0, 0.0});
    CompensatedComplexSum run;
    for (const cplx& v : z) {
        run.add(v);
        const cplx p = run.value();
        pts.push_back({p.real(), p.imag()});
    }
    return hull_diameter(convex_hull(std::move(pts)));
}

double eval_S_star(const ExpSumSpec& s) {
    check_ranges(s.H, s.M, s.N, "eval_S_star");
    const double mn_scale = static_cast<double>(s.M) * static_cast<double>(s.N);
    std::vector<double> hpow(s.H);
    for (u64 i = 0; i < s.H; ++i) {
        hpow[i] = std::pow(static_cast<double>(s.H + 1 + i) / static_cast<double>(s.H), s.alpha);
    }
    CompensatedSum total;
    std::vector<cplx> inner(s.H);
    for (u64 m = s.M + 1; m <= 2 * s.M; ++m) {
        for (u64 n = s.N + 1; n <= 2 * s.N; ++n) {
            const double base = static_cast<double>(m) * static_cast<double>(n) + s.delta;
            if (!(base > 0.0)) throw DomainError("eval_S_star: power base mn + delta must be positive");
            const double mpow = s.X * std::pow(base / mn_scale, s.beta);
            for (u64 i = 0; i < s.H; ++i) inner[i] = unit_phase(mpow * hpow[i]);
            total.add(max_partial_sum(inner));
        }
    }
    return total.value();
}

cplx eval_frak_S(double x, u64 d1, u64 d2, u64 l, u64 h, int delta) {
    if (delta != 0 && delta != 1) throw DomainError("eval_frak_S: delta must be 0 or 1");
    if (!(x > 1.0)) throw DomainError("eval_frak_S: x must exceed 1");
    check_ranges(d1, d2, l, "eval_frak_S");
    if (h == 0) throw DomainError("eval_frak_S: range sizes must be positive");
    if (h > kTermBudget / (d1 * d2 * l)) {
        throw CapacityError("eval_frak_S: term budget exceeded");
    }
    CompensatedComplexSum acc;
    for (u64 hh = h + 1; hh <= 2 * h; ++hh) {
        const double w = 1.0 / static_cast<double>(hh);
        for (u64 a = d1 + 1; a <= 2 * d1; ++a) {
            for (u64 b = d2 + 1; b <= 2 * d2; ++b) {
                const double den = static_cast<double>(a * b + static_cast<u64>(delta));
                for (u64 lv = l + 1; lv <= 2 * l; ++lv) {
                    acc.add(w * unit_phase(static_cast<double>(hh) * x /
                                           (static_cast<double>(lv) * den)));
                }
            }
        }
    }
    return acc.value();
}

double eval_rs3d(u64 h, u64 m, u64 n, double x, double alpha, double beta, double gamma) {
    check_ranges(h, m, n, "eval_rs3d");
    std::vector<double> mpow(m);
    for (u64 i = 0; i < m; ++i) {
        mpow[i] = std::pow(static_cast<double>(m + 1 + i) / static_cast<double>(m), alpha);
    }
    CompensatedSum total;
    std::vector<cplx> inner(m);
    for (u64 hh = h + 1; hh <= 2 * h; ++hh) {
        const double hp = std::pow(static_cast<double>(hh) / static_cast<double>(h), beta);
        for (u64 nn = n + 1; nn <= 2 * n; ++nn) {
            const double np = std::pow(static_cast<double>(nn) / static_cast<double>(n), gamma);
            const double scale = x * hp * np;
            for (u64 i = 0; i < m; ++i) inner[i] = unit_phase(scale * mpow[i]);
            total.add(max_partial_sum(inner));
        }
    }
    return total.value();
}

double theoretical_bound(BoundKind kind, const BoundParams& p, double epsilon) {
    if (epsilon < 0.0) throw DomainError("theoretical_bound: epsilon must be >= 0");
    auto need = [](double v, const char* name) {
        if (!(v > 0.0)) throw DomainError(std::string("theoretical_bound: ") + name +
                                          " must be positive");
    };
    switch (kind) {
        case BoundKind::thm_S: {
            need(p.H, "H"); need(p.M, "M"); need(p.N, "N"); need(p.X, "X");
            const double hmn = p.H * p.M * p.N;
            return std::pow(hmn, 1.0 + epsilon) *
                   (std::pow(p.X / (p.M * p.N * p.H * p.H), 0.25) +
                    std::pow(p.M * p.N, -0.25) + 1.0 / std::sqrt(p.H) + 1.0 / std::sqrt(p.X));
        }
        case BoundKind::thm_Sstar: {
            need(p.H, "H"); need(p.M, "M"); need(p.N, "N"); need(p.X, "X");
            const double hmn = p.H * p.M * p.N;
            return std::pow(hmn, 1.0 + epsilon) *
                   (std::pow(p.X / (p.M * p.N * p.H * p.H), 0.25) +
                    1.0 / std::sqrt(p.H) + 1.0 / p.X);
        }
        case BoundKind::rs3d: {
            need(p.H, "H"); need(p.M, "M"); need(p.N, "N"); need(p.X, "X");
            const double hmn = p.H * p.M * p.N;
            return std::pow(hmn, 1.0 + epsilon) *
                   (std::pow(p.X / (p.H * p.N * p.M * p.M), 0.25) +
                    1.0 / std::sqrt(p.M) + 1.0 / p.X);
        }
        case BoundKind::proposition: {
            need(p.H, "H");
            if (!(p.x > 1.0)) throw DomainError("theoretical_bound: x must exceed 1");
            if (!(p.D >= 1.0 && p.D < p.x)) {
                throw DomainError("theoretical_bound: need 1 <= D < x");
            }
            need(p.L, "L");
            if (!(p.L * p.L * p.D <= p.x)) {
                throw DomainError("theoretical_bound: need L^2 D <= x");
            }
            return std::pow(p.x, epsilon) *
                   (std::pow(p.x, 11.0 / 30.0) * std::pow(p.H, 0.25) * std::pow(p.D, 3.0 / 8.0) +
                    std::pow(p.x, 7.0 / 30.0) * std::pow(p.D, 0.75) +
                    std::pow(p.x, 23.0 / 60.0) * std::sqrt(p.H) * std::pow(p.D, 0.25) +
                    std::pow(p.x, 4.0 / 15.0) * std::sqrt(p.H) * std::sqrt(p.D) +
                    std::pow(p.x, -0.25) / std::sqrt(p.H) * std::pow(p.D, 1.25) + p.D +
                    std::pow(p.x, -0.4) * p.H * std::pow(p.D, 1.5));
        }
    }
    throw DomainError("theoretical_bound: unknown kind");
}

SweepResult bound_sweep(BoundKind kind, const std::vector<SweepPoint>& grid,
                        double epsilon, u64 seed, unsigned threads) {
    if (kind == BoundKind::proposition) {
        throw DomainError("bound_sweep: proposition has no sweepable sum; use theoretical_bound");
    }
    if (grid.empty()) throw DomainError("bound_sweep: empty grid");
    struct Slot {
        BoundCheckReport rep;
        std::string err;
        bool ok = false;
    };
    std::vector<Slot> slots(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        const SweepPoint& pt = grid[i];
        std::ostringstream ps;
        ps << "H=" << pt.H << " M=" << pt.M << " N=" << pt.N << " X=" << pt.X
           << " alpha=" << pt.alpha << " beta=" << pt.beta;
        if (kind == BoundKind::rs3d) ps << " gamma=" << pt.gamma;
        else ps << " delta=" << pt.delta;
        try {
            const double cond = pt.alpha * (pt.alpha - 1.0) * pt.beta;
            double sum_mod = 0.0;
            if (kind == BoundKind::rs3d) {
                if (cond * pt.gamma == 0.0) {
                    throw PreconditionError("exponent side condition violated");
                }
                sum_mod = eval_rs3d(pt.H, pt.M, pt.N, pt.X, pt.alpha, pt.beta, pt.gamma);
            } else {
                // both readings of the side condition: product neither 0 nor 1
                if (cond == 0.0 || cond == 1.0) {
                    throw PreconditionError("exponent side condition violated");
                }
                ExpSumSpec s;
                s.H = pt.H; s.M = pt.M; s.N = pt.N;
                s.X = pt.X; s.alpha = pt.alpha; s.beta = pt.beta; s.delta = pt.delta;
                s.validate();
                if (kind == BoundKind::thm_S) {
                    std::mt19937_64 rng(mix_seed(seed, i));
                    std::uniform_real_distribution<double> unit(0.0, 1.0);
                    std::vector<cplx> b(s.H);
                    for (auto& v : b) v = unit_phase(unit(rng));
                    std::vector<cplx> a(s.M * s.N);
                    for (auto& v : a) v = unit_phase(unit(rng));
                    const u64 h0 = s.H, m0 = s.M, n0 = s.N;
                    s.coeff_b = [b = std::move(b), h0](u64 h) { return b[h - h0 - 1]; };
                    s.coeff_a = [a = std::move(a), m0, n0](u64 m, u64 n) {
                        return a[(m - m0 - 1) * n0 + (n - n0 - 1)];
                    };
                    sum_mod = std::abs(eval_S(s));
                } else {
                    sum_mod = eval_S_star(s);
                }
            }
            BoundParams bp;
            bp.H = static_cast<double>(pt.H);
            bp.M = static_cast<double>(pt.M);
            bp.N = static_cast<double>(pt.N);
            bp.X = pt.X;
            const double bound = theoretical_bound(kind, bp, epsilon);
            slots[i].rep = BoundCheckReport{sum_mod, bound, sum_mod / bound, ps.str()};
            slots[i].ok = true;
        } catch (const std::exception& e) {
            slots[i].err = ps.str() + " -> " + e.what();
        }
    });
    SweepResult out;
    for (auto& s : slots) {
        if (s.ok) {
            out.max_ratio = std::max(out.max_ratio, s.rep.ratio);
            out.reports.push_back(std::move(s.rep));
        } else {
            out.errors.push_back(std::move(s.err));
        }
    }
    return out;
}

namespace {

// Ordered pairs (i,j), diagonal included, with |v_i - v_j| <= w.
double window_pair_count(std::vector<double> vals, double w) {
    std::sort(vals.begin(), vals.end());
    const std::size_t n = vals.size();
    double count = 0.0;
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (vals[i] - vals[lo] > w) ++lo;
        while (hi < n && vals[hi] - vals[i] <= w) ++hi;
        count += static_cast<double>(hi - lo);
    }
    return count;
}

}  // namespace

BoundCheckReport double_large_sieve_check(const std::vector<double>& u,
                                          const std::vector<double>& v,
                                          const std::vector<cplx>& a,
                                          const std::vector<cplx>& b, double X) {
    if (u.empty() || v.empty()) throw DomainError("double_large_sieve_check: empty input");
    if (a.size() != u.size() || b.size() != v.size()) {
        throw DomainError("double_large_sieve_check: coefficient length mismatch");
    }
    if (!(X >= 1.0)) throw DomainError("double_large_sieve_check: X must be >= 1");
    if (v.size() > kTermBudget / u.size()) {
        throw CapacityError("double_large_sieve_check: term budget exceeded");
    }
    for (const auto& c : a) checked_coeff(c, "double_large_sieve_check");
    for (const auto& c : b) checked_coeff(c, "double_large_sieve_check");
    CompensatedComplexSum s;
    for (std::size_t k = 0; k < u.size(); ++k) {
        for (std::size_t l = 0; l < v.size(); ++l) {
            s.add(a[k] * b[l] * unit_phase(X * u[k] * v[l]));
        }
    }
    const double b1 = window_pair_count(u, 1.0 / X);
    const double b2 = window_pair_count(v, 1.0 / X);
    BoundCheckReport rep;
    rep.sum_modulus = std::abs(s.value());
    rep.bound_value = std::sqrt(X) * std::sqrt(b1) * std::sqrt(b2);
    rep.ratio = rep.sum_modulus / rep.bound_value;
    std::ostringstream ps;
    ps << "K=" << u.size() << " L=" << v.size() << " X=" << X << " B1=" << b1 << " B2=" << b2;
    rep.params = ps.str();
    return rep;
}

BoundCheckReport maximal_inequality_check(const std::vector<cplx>& z, double k,
                                          int quadrature_points) {
    if (z.empty()) throw DomainError("maximal_inequality_check: empty sequence");
    if (!(k >= 1.0)) throw DomainError("maximal_inequality_check: k must be >= 1");
    if (quadrature_points < 1000) {
        throw DomainError("maximal_inequality_check: need >= 1000 quadrature points");
    }
    const std::size_t n = z.size();
    const double nd = static_cast<double>(n);
    const double lhs = std::pow(max_partial_sum(z), k);

    auto integrand = [&](double t) {
        const cplx w = unit_phase(t);
        cplx rotor = w;
        CompensatedComplexSum acc;
        for (std::size_t i = 0; i < n; ++i) {
            acc.add(z[i] * rotor);
            rotor *= w;
        }
        const double weight = std::min(nd, 1.0 / (2.0 * std::abs(t)));
        return std::pow(std::abs(acc.value()), k) * weight;
    };

    // midpoint cells on [0, 1/2], mirrored to both signs: uniform core where
    // the weight plateaus at N, geometric octaves across its 1/(2t) decay
    CompensatedSum integral;
    const double t0 = 1.0 / (2.0 * nd);
    const int core_cells = quadrature_points / 2;
    const double core_w = t0 / core_cells;
    for (int sign : {1, -1}) {
        for (int i = 0; i < core_cells; ++i) {
            const double t = (i + 0.5) * core_w * sign;
            integral.add(integrand(t) * core_w);
        }
    }
    int octaves = 0;
    for (double lo = t0; lo < 0.5; lo *= 2.0) ++octaves;
    if (octaves > 0) {
        const int cells = std::max(200, quadrature_points / (2 * octaves));
        double lo = t0;
        for (int j = 0; j < octaves; ++j) {
            const double hi = std::min(lo * 2.0, 0.5);
            const double w = (hi - lo) / cells;
            for (int sign : {1, -1}) {
                for (int i = 0; i < cells; ++i) {
                    const double t = (lo + (i + 0.5) * w) * sign;
                    integral.add(integrand(t) * w);
                }
            }
            lo = hi;
        }
    }
    const double rhs = std::pow(1.0 + std::log(nd), k - 1.0) * integral.value();
    BoundCheckReport rep;
    rep.sum_modulus = lhs;
    rep.bound_value = rhs;
    rep.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    std::ostringstream ps;
    ps << "N=" << n << " k=" << k << " quadrature_points=" << quadrature_points;
    rep.params = ps.str();
    return rep;
}

}  // namespace hyperdiv

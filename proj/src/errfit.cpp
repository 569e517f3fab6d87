#include "hyperdiv/errfit.hpp"

#include <algorithm>
#include <cmath>

#include "hyperdiv/errors.hpp"
#include "hyperdiv/numeric.hpp"

namespace hyperdiv {

// --- residual grid ---

std::vector<TsumRecord> residual_grid(const DivisorTable& table,
                                      const RigorousValue& c1,
                                      const RigorousValue& c2,
                                      const std::vector<u64>& xs,
                                      unsigned threads) {
    std::vector<u64> sorted = xs;
    std::sort(sorted.begin(), sorted.end());

    std::vector<TsumRecord> rows(sorted.size());
    parallel_for(sorted.size(), threads, [&](std::size_t i) {
        const u64 x = sorted[i];
        rows[i].x = x;
        rows[i].t_value = t_exact(table, x, TsumMethod::blocked);
        rows[i].residual = residual(table, c1, c2, x);
    });
    return rows;
}

// --- exponent fit ---

FitReport fit_exponent(const std::vector<TsumRecord>& points) {
    FitReport report;
    report.points = points;
    std::sort(report.points.begin(), report.points.end(),
              [](const TsumRecord& a, const TsumRecord& b) { return a.x < b.x; });

    std::vector<double> us;
    std::vector<double> vs;
    us.reserve(report.points.size());
    vs.reserve(report.points.size());
    for (const TsumRecord& row : report.points) {
        if (row.x == 0) throw DomainError("fit points require x >= 1");
        const double x = static_cast<double>(row.x);
        const double r = std::fabs(row.residual);
        const double normalized = r / std::pow(x, 17.0 / 30.0);
        report.max_normalized = std::max(report.max_normalized, normalized);
        if (r == 0.0) {
            ++report.dropped;
            continue;
        }
        us.push_back(std::log(x));
        vs.push_back(std::log(r));
    }
    if (us.size() < 3)
        throw InsufficientDataError("exponent fit needs at least 3 points with nonzero residual");

    CompensatedSum su;
    CompensatedSum sv;
    for (std::size_t i = 0; i < us.size(); ++i) {
        su.add(us[i]);
        sv.add(vs[i]);
    }
    const double n = static_cast<double>(us.size());
    const double um = su.value() / n;
    const double vm = sv.value() / n;

    CompensatedSum suu;
    CompensatedSum suv;
    for (std::size_t i = 0; i < us.size(); ++i) {
        suu.add((us[i] - um) * (us[i] - um));
        suv.add((us[i] - um) * (vs[i] - vm));
    }
    if (suu.value() <= 0.0)
        throw InsufficientDataError("exponent fit needs points at distinct x values");

    report.theta_hat = suv.value() / suu.value();
    report.c_hat = std::exp(vm - report.theta_hat * um);
    return report;
}

}  // namespace hyperdiv

#include "hyperdiv/divisor.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hyperdiv/numeric.hpp"

namespace hyperdiv {

namespace {

u64 sieve_cap() {
    if (const char* env = std::getenv("HYPERDIV_SIEVE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultSieveCap;
}

}  // namespace

DivisorTable build_divisor_table(u64 limit) {
    const u64 cap = sieve_cap();
    if (limit == 0) throw CapacityError("divisor table limit must be positive");
    if (limit > cap) {
        throw CapacityError("divisor table limit " + std::to_string(limit) +
                            " exceeds cap " + std::to_string(cap));
    }
    DivisorTable t;
    t.limit = limit;
    t.tau.assign(limit + 1, 0);
    for (u64 d = 1; d <= limit; ++d) {
        for (u64 m = d; m <= limit; m += d) ++t.tau[m];
    }
    t.prefix.assign(limit + 1, 0);
    i64 run = 0;
    for (u64 n = 1; n <= limit; ++n) {
        run += t.tau[n];
        t.prefix[n] = run;
    }
    return t;
}

i64 divisor_summatory(const DivisorTable& table, u64 x) {
    if (x == 0 || x > table.limit) {
        throw RangeError("divisor_summatory: x = " + std::to_string(x) +
                         " outside table limit " + std::to_string(table.limit));
    }
    return table.prefix[x];
}

i64 divisor_summatory_hyperbola(u64 x) {
    if (x == 0) throw RangeError("divisor_summatory_hyperbola: x must be positive");
    if (x > (u64(1) << 56)) {
        throw CapacityError("divisor_summatory_hyperbola: x above 2^56 risks overflow");
    }
    const u64 s = integer_sqrt(x);
    i64 sum = 0;
    for (u64 n = 1; n <= s; ++n) sum += static_cast<i64>(x / n);
    return 2 * sum - static_cast<i64>(s * s);
}

double psi(double t) {
    double frac = t - std::floor(t);
    if (frac >= 1.0) frac = 0.0;  // floor rounding can leave frac == 1.0 for tiny negative t
    return frac - 0.5;
}

double delta(const DivisorTable& table, u64 x) {
    const i64 d = divisor_summatory(table, x);
    const double xd = static_cast<double>(x);
    return static_cast<double>(d) - xd * (std::log(xd) + 2.0 * kEulerGamma - 1.0);
}

double delta_via_psi(u64 x) {
    const u64 s = integer_sqrt(x);
    const double xd = static_cast<double>(x);
    CompensatedSum sum;
    for (u64 n = 1; n <= s; ++n) sum.add(psi(xd / static_cast<double>(n)));
    return -2.0 * sum.value();
}

}  // namespace hyperdiv

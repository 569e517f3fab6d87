#include "hyperdiv/constants.hpp"

#include <cmath>
#include <string>

#include "hyperdiv/numeric.hpp"

namespace hyperdiv {

namespace {

void check_cutoff(const DivisorTable& table, u64 cutoff, TailMode mode, u64 abel_min) {
    if (cutoff == 0) throw RangeError("constants: cutoff must be positive");
    if (cutoff > table.limit) {
        throw RangeError("constants: cutoff " + std::to_string(cutoff) +
                         " exceeds table limit " + std::to_string(table.limit));
    }
    if (mode == TailMode::abel && cutoff < abel_min) {
        throw RangeError("constants: abel mode needs cutoff >= " + std::to_string(abel_min));
    }
}

// integral_D^inf (log t + 2 gamma)/(t(t+1)) dt via 1/(t(t+1)) = sum_{j>=2} (-1)^j t^{-j}:
// each term integrates to D^{1-j}[(log D + 2 gamma)/(j-1) + 1/(j-1)^2].
// Returns the series value; *trunc receives a bound on the omitted remainder.
double c1_tail_main(double d, double* trunc) {
    const double logd = std::log(d);
    CompensatedSum acc;
    double p = 1.0 / d;  // D^{1-j} at j = 2
    double sign = 1.0;
    int j = 2;
    for (; j <= 64; ++j) {
        const double jm = j - 1.0;
        const double term = p * ((logd + 2.0 * kEulerGamma) / jm + 1.0 / (jm * jm));
        acc.add(sign * term);
        p /= d;
        sign = -sign;
        if (term < 1e-280) break;
    }
    // remainder after the last included term J: sum_{j>J} of D^{1-j} terms is
    // <= 2 D^{-J} (log D + 2 gamma + 1) for D >= 2; p already holds D^{-J}.
    *trunc = 2.0 * p * (logd + 2.0 * kEulerGamma + 1.0);
    return acc.value();
}

// integral_D^inf g(t)(log t + 2 gamma) dt with g(t) = log t/t - log(t+1)/(t+1),
// via g(t) = sum_{j>=2} (-1)^j (log t - H_{j-1}) t^{-j}. Term j integrates to
// D^{1-j} [L2 + (2 gamma - H_{j-1}) L1 - 2 gamma H_{j-1} L0] with
// L0 = 1/(j-1), L1 = log D L0 + L0^2, L2 = log^2 D L0 + 2 log D L0^2 + 2 L0^3.
double c3_tail_main(double d, double* trunc) {
    const double logd = std::log(d);
    CompensatedSum acc;
    double p = 1.0 / d;
    double sign = 1.0;
    double harmonic = 0.0;  // H_{j-1}
    int last_j = 2;
    for (int j = 2; j <= 64; ++j) {
        harmonic += 1.0 / (j - 1.0);
        const double l0 = 1.0 / (j - 1.0);
        const double l1 = logd * l0 + l0 * l0;
        const double l2 = logd * logd * l0 + 2.0 * logd * l0 * l0 + 2.0 * l0 * l0 * l0;
        const double term = p * (l2 + (2.0 * kEulerGamma - harmonic) * l1 -
                                 2.0 * kEulerGamma * harmonic * l0);
        acc.add(sign * term);
        p /= d;
        sign = -sign;
        last_j = j;
        if (std::abs(term) < 1e-280) break;
    }
    // |term_j| <= D^{1-j}(A + jB) with A = log^2 D + 4 log D + 6, B = log D + 3;
    // summing j > J with D >= 2 gives 2 D^{-J} A + 4 (J+1) D^{-J} B.
    const double a = logd * logd + 4.0 * logd + 6.0;
    const double b = logd + 3.0;
    *trunc = p * (2.0 * a + 4.0 * (last_j + 1.0) * b);
    return acc.value();
}

}  // namespace

RigorousValue compute_c1(const DivisorTable& table, u64 cutoff, TailMode mode) {
    check_cutoff(table, cutoff, mode, 3);
    CompensatedSum partial;
    for (u64 dd = 1; dd <= cutoff; ++dd) {
        partial.add(static_cast<double>(table.tau[dd]) /
                    static_cast<double>(dd * (dd + 1)));
    }
    RigorousValue r;
    r.cutoff = cutoff;
    r.mode = mode;
    const double d = static_cast<double>(cutoff);
    if (mode == TailMode::crude) {
        r.value = partial.value();
        r.tail = 4.0 / std::sqrt(d);
        return r;
    }
    double trunc = 0.0;
    const double main_part = c1_tail_main(d, &trunc);
    r.value = partial.value() + main_part;
    // Delta-envelope part: the remainder sum minus its smooth part equals
    // -w(D)Delta(D) - integral_D^inf w'(t)Delta(t) dt with w(t) = 1/(t(t+1)).
    // |Delta(t)| <= sqrt(t) + 4 (validated envelope) and |w'(t)| <= 3/t^3
    // (t(2t+1) <= 3(t+1)^2), so the integral part is <= 2 D^{-3/2} + 6 D^{-2}.
    const double w = 1.0 / (d * (d + 1.0));
    r.tail = w * (std::sqrt(d) + 4.0) + 2.0 * std::pow(d, -1.5) + 6.0 / (d * d) + trunc;
    return r;
}

RigorousValue compute_c3(const DivisorTable& table, u64 cutoff, TailMode mode) {
    check_cutoff(table, cutoff, mode, 3);
    auto g = [](double t) { return std::log(t) / t - std::log(t + 1.0) / (t + 1.0); };
    CompensatedSum partial;
    for (u64 dd = 1; dd <= cutoff; ++dd) {
        partial.add(static_cast<double>(table.tau[dd]) * g(static_cast<double>(dd)));
    }
    RigorousValue r;
    r.cutoff = cutoff;
    r.mode = mode;
    const double d = static_cast<double>(cutoff);
    if (mode == TailMode::crude) {
        r.value = partial.value();
        if (cutoff >= 3) {
            // 0 < g(t) <= log t / t^2 for t >= 3 and tau(d) <= 2 sqrt(d).
            r.tail = 4.0 * (std::log(d) + 2.0) / std::sqrt(d);
        } else {
            // extend the d >= 3 formula by the explicitly bounded missing terms
            double missing = 0.0;
            for (u64 dd = cutoff + 1; dd <= 3; ++dd) {
                missing += 2.0 * std::abs(g(static_cast<double>(dd)));
            }
            r.tail = missing + 4.0 * (std::log(3.0) + 2.0) / std::sqrt(3.0);
        }
        return r;
    }
    double trunc = 0.0;
    const double main_part = c3_tail_main(d, &trunc);
    r.value = partial.value() + main_part;
    // |g(D)| <= log D / D^2 for D >= 3 and |g'(t)| <= (2 log t + 5)/t^3 (mean
    // value on h(u) = log u/u with h''(u) = (2 log u - 3)/u^3), so the
    // Delta-envelope part integrates to
    // D^{-3/2}((4/3) log D + 38/9) + D^{-2}(4 log D + 12).
    const double logd = std::log(d);
    r.tail = (logd / (d * d)) * (std::sqrt(d) + 4.0) +
             std::pow(d, -1.5) * ((4.0 / 3.0) * logd + 38.0 / 9.0) +
             (4.0 * logd + 12.0) / (d * d) + trunc;
    return r;
}

RigorousValue compute_c2(const RigorousValue& c1, const RigorousValue& c3) {
    RigorousValue r;
    const double k = 2.0 * kEulerGamma - 1.0;
    r.value = k * c1.value - c3.value;
    r.tail = k * c1.tail + c3.tail;
    r.cutoff = c1.cutoff < c3.cutoff ? c1.cutoff : c3.cutoff;
    r.mode = (c1.mode == c3.mode) ? c1.mode : TailMode::crude;
    return r;
}

}  // namespace hyperdiv

#include "hyperdiv/vaaler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperdiv/divisor.hpp"
#include "hyperdiv/numeric.hpp"

namespace hyperdiv {

namespace {
constexpr double kPi = std::numbers::pi;
}

double phi(double t) {
    if (!(std::abs(t) < 1.0)) throw DomainError("phi: |t| must be < 1");
    const double at = std::abs(t);
    if (at < 1e-4) {
        // pi t cot(pi t) = 1 - z^2/3 - z^4/45 - ..., z = pi t; avoids the 0/0
        const double z2 = (kPi * t) * (kPi * t);
        return (1.0 - z2 / 3.0 - z2 * z2 / 45.0) * (1.0 - at) + at;
    }
    const double pt = kPi * t;
    return pt * (1.0 - at) * (std::cos(pt) / std::sin(pt)) + at;
}

double psi_vaaler(double x, int H) {
    if (H < 1) throw DomainError("psi_vaaler: H must be >= 1");
    CompensatedSum acc;
    for (int h = 1; h <= H; ++h) {
        const double weight = phi(static_cast<double>(h) / (H + 1.0));
        const double s = unit_phase(h * x).imag();  // sin(2 pi h x), reduced mod 1
        acc.add(weight * s / (kPi * h));
    }
    return -acc.value();
}

double vaaler_envelope(double x, int H) {
    if (H < 1) throw DomainError("vaaler_envelope: H must be >= 1");
    CompensatedSum acc;
    acc.add(1.0);
    for (int h = 1; h <= H; ++h) {
        const double weight = 1.0 - static_cast<double>(h) / (H + 1.0);
        acc.add(2.0 * weight * unit_phase(h * x).real());
    }
    // mathematically a Fejer kernel value, >= 0; clamp rounding residue
    return std::max(0.0, acc.value() / (2.0 * H + 2.0));
}

double vaaler_envelope_fejer(double x, int H) {
    if (H < 1) throw DomainError("vaaler_envelope_fejer: H must be >= 1");
    // reduce mod 1 first; both sines are squared so the fold's sign is moot
    const double xr = x - std::floor(x);
    const double s = std::sin(kPi * xr);
    const double t = std::sin(kPi * (H + 1.0) * xr);
    const double r = t / s;
    return r * r / ((2.0 * H + 2.0) * (H + 1.0));
}

VaalerEval evaluate_vaaler(double x, int H) {
    VaalerEval e;
    e.x = x;
    e.H = H;
    e.true_psi = psi(x);
    e.approx = psi_vaaler(x, H);
    e.envelope = vaaler_envelope(x, H);
    return e;
}

}  // namespace hyperdiv

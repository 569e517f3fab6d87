#pragma once

#include "hyperdiv/errors.hpp"

namespace hyperdiv {

// Phi(t) = pi t (1 - |t|) cot(pi t) + |t| on (-1, 1); even, Phi(0) = 1,
// Phi(1/2) = 1/2. |t| >= 1 raises DomainError.
double phi(double t);

// Degree-H trigonometric approximation of the sawtooth psi:
// -sum_{h=1..H} Phi(h/(H+1)) sin(2 pi h x)/(pi h); period 1, odd about 0.
double psi_vaaler(double x, int H);

// Pointwise error envelope: (1/(2H+2)) sum_{|h|<=H} (1 - |h|/(H+1)) e(hx),
// a nonnegative real (Fejer kernel); |psi(x) - psi_vaaler(x,H)| <= envelope.
// Computed by the direct cosine sum, clamped at 0 against rounding.
double vaaler_envelope(double x, int H);

// Closed Fejer form (1/(2H+2)) (sin(pi(H+1)x)/sin(pi x))^2 / (H+1);
// cross-check only, singular at integer x.
double vaaler_envelope_fejer(double x, int H);

// One CSV-ready evaluation row.
struct VaalerEval {
    double x = 0.0;
    int H = 0;
    double true_psi = 0.0;
    double approx = 0.0;
    double envelope = 0.0;
};

VaalerEval evaluate_vaaler(double x, int H);

}  // namespace hyperdiv

#pragma once

#include <cstddef>
#include <vector>

#include "hyperdiv/hypersum.hpp"

namespace hyperdiv {

// Power-law fit |R(x)| ~ c x^theta through residual samples, plus the
// largest sample measured against the reference growth rate x^(17/30).
struct FitReport {
    std::vector<TsumRecord> points;  // rows sorted by ascending x
    double theta_hat = 0.0;          // least-squares slope of log|R| on log x
    double c_hat = 0.0;              // exp(intercept)
    double max_normalized = 0.0;     // max |residual| / x^(17/30) over all rows
    std::size_t dropped = 0;         // rows with residual == 0, excluded from the fit
};

// Evaluates (x, T(x), residual) at every x in xs with the blocked method.
// xs is sorted internally and duplicates are kept, so the result is the same
// for any input order and any thread count. x = 0 or x > table.limit raises
// RangeError; constants with tails > 1e-6 raise PrecisionError.
std::vector<TsumRecord> residual_grid(const DivisorTable& table,
                                      const RigorousValue& c1,
                                      const RigorousValue& c2,
                                      const std::vector<u64>& xs,
                                      unsigned threads = 1);

// Ordinary least squares on (log x, log |residual|). Rows with residual == 0
// are dropped and counted; fewer than 3 surviving rows, or all surviving rows
// sharing one x, raises InsufficientDataError. Any x = 0 raises DomainError.
FitReport fit_exponent(const std::vector<TsumRecord>& points);

}  // namespace hyperdiv

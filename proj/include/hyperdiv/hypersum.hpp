#pragma once

#include "hyperdiv/constants.hpp"
#include "hyperdiv/divisor.hpp"

namespace hyperdiv {

enum class TsumMethod { naive2d, single, blocked };

// One evaluation point of the hyperbolic sum T(x) = sum_{n<=x} tau([x/n]) tau(n).
struct TsumRecord {
    u64 x = 0;
    i64 t_value = 0;
    double residual = 0.0;  // t_value - c1 x log x - c2 x
};

// Exact T(x). All three methods agree:
//   naive2d  walks every pair n1*n2 <= x, cost O(x log x); needs x <= 1e6.
//   single   sums tau([x/n]) tau(n) over n <= x, cost O(x).
//   blocked  groups n by constant q = [x/n] into O(sqrt x) plateau blocks,
//            using prefix sums: sum_q tau(q) (D([x/q]) - D([x/(q+1)])).
// Integer arithmetic only; x = 0 or x > table.limit raises RangeError,
// naive2d above 1e6 raises CapacityError.
i64 t_exact(const DivisorTable& table, u64 x, TsumMethod method);

// T(x) - c1.value x log x - c2.value x using the blocked method. Propagated
// constant uncertainty is c1.tail x log x + c2.tail x; callers keep it small
// by requiring both tails <= 1e-6, else PrecisionError.
double residual(const DivisorTable& table, const RigorousValue& c1,
                const RigorousValue& c2, u64 x);

}  // namespace hyperdiv

#include "hyperdiv/hypersum.hpp"

#include <cmath>
#include <string>

namespace hyperdiv {

namespace {

i64 t_naive2d(const DivisorTable& table, u64 x) {
    i64 acc = 0;
    for (u64 n1 = 1; n1 <= x; ++n1) {
        const u64 q1 = x / n1;  // [x/(n1 n2)] = [q1/n2]
        for (u64 n2 = 1; n2 <= q1; ++n2) {
            acc += table.tau[q1 / n2];
        }
    }
    return acc;
}

i64 t_single(const DivisorTable& table, u64 x) {
    i64 acc = 0;
    for (u64 n = 1; n <= x; ++n) {
        acc += static_cast<i64>(table.tau[x / n]) * table.tau[n];
    }
    return acc;
}

i64 t_blocked(const DivisorTable& table, u64 x) {
    i64 acc = 0;
    u64 n = 1;
    while (n <= x) {
        const u64 q = x / n;         // constant over the block
        const u64 hi = x / q;        // last n with [x/n] = q
        acc += static_cast<i64>(table.tau[q]) * (table.prefix[hi] - table.prefix[n - 1]);
        n = hi + 1;
    }
    return acc;
}

}  // namespace

i64 t_exact(const DivisorTable& table, u64 x, TsumMethod method) {
    if (x == 0 || x > table.limit) {
        throw RangeError("t_exact: x = " + std::to_string(x) +
                         " outside table limit " + std::to_string(table.limit));
    }
    switch (method) {
        case TsumMethod::naive2d:
            if (x > 1000000) {
                throw CapacityError("t_exact: naive2d method is limited to x <= 1e6");
            }
            return t_naive2d(table, x);
        case TsumMethod::single:
            return t_single(table, x);
        case TsumMethod::blocked:
            return t_blocked(table, x);
    }
    throw DomainError("t_exact: unknown method");
}

double residual(const DivisorTable& table, const RigorousValue& c1,
                const RigorousValue& c2, u64 x) {
    if (c1.tail > 1e-6 || c2.tail > 1e-6) {
        throw PrecisionError("residual: constant tails must be <= 1e-6");
    }
    const i64 t = t_exact(table, x, TsumMethod::blocked);
    const double xd = static_cast<double>(x);
    return static_cast<double>(t) - c1.value * xd * std::log(xd) - c2.value * xd;
}

}  // namespace hyperdiv

#pragma once

#include <cstdint>
#include <vector>

#include "hyperdiv/errors.hpp"

namespace hyperdiv {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Divisor counts tau[1..limit] with exact prefix sums D(n) = sum_{m<=n} tau(m).
// Immutable after build; index 0 is unused padding.
struct DivisorTable {
    u64 limit = 0;
    std::vector<std::uint16_t> tau;  // tau(n) < 2^16 for every n < 2^63
    std::vector<i64> prefix;         // prefix[n] = D(n), exact

    std::uint16_t tau_at(u64 n) const { return tau[n]; }
    i64 prefix_at(u64 n) const { return prefix[n]; }
};

// Default memory cap on sieve size; override with env HYPERDIV_SIEVE_CAP.
inline constexpr u64 kDefaultSieveCap = u64(1) << 27;

// Multiples sieve, O(limit log limit) increments. limit = 0 or limit above
// the cap raises CapacityError.
DivisorTable build_divisor_table(u64 limit);

// D(x) from the table. x = 0 or x > table.limit raises RangeError.
i64 divisor_summatory(const DivisorTable& table, u64 x);

// Table-free cross-check: D(x) = 2*sum_{n<=isqrt(x)} floor(x/n) - isqrt(x)^2.
// Intermediate sums stay below 2^63 for x <= 2^56; larger x raises CapacityError.
i64 divisor_summatory_hyperbola(u64 x);

// Sawtooth {t} - 1/2, range [-1/2, 1/2); right-continuous, so psi(n) = -1/2
// at integers and psi(n + 1/2) = 0.
double psi(double t);

// D(x) - x(log x + 2*gamma - 1). x = 0 or x > table.limit raises RangeError.
double delta(const DivisorTable& table, u64 x);

// -2*sum_{n<=isqrt(x)} psi(x/n); table-free, O(sqrt(x)) divisions. Double
// division keeps the fractional part of x/n accurate for x <= 2^46.
double delta_via_psi(u64 x);

}  // namespace hyperdiv

#pragma once

// Independent brute-force oracles used only by tests. Deliberately naive:
// correctness by inspection, no shared code with the library implementations.

#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

// Divisor count by trial division up to sqrt(n).
inline std::uint64_t tau(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    }
    return count;
}

// D(x) by direct summation of trial-division counts.
inline std::int64_t divisor_summatory(std::uint64_t x) {
    std::int64_t sum = 0;
    for (std::uint64_t n = 1; n <= x; ++n) sum += static_cast<std::int64_t>(tau(n));
    return sum;
}

// Max over all contiguous subintervals of |sum z_n|, O(len^2) scan.
inline double max_partial_sum(const std::vector<std::complex<double>>& z) {
    double best = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        std::complex<double> run = 0.0;
        for (std::size_t j = i; j < z.size(); ++j) {
            run += z[j];
            best = std::max(best, std::abs(run));
        }
    }
    return best;
}

// T(x) = sum over all pairs n1*n2 <= x of tau(floor(x/(n1*n2))), pair by pair.
inline std::int64_t t_sum(std::uint64_t x) {
    std::int64_t sum = 0;
    for (std::uint64_t n1 = 1; n1 <= x; ++n1) {
        for (std::uint64_t n2 = 1; n1 * n2 <= x; ++n2) {
            sum += static_cast<std::int64_t>(tau(x / (n1 * n2)));
        }
    }
    return sum;
}

}  // namespace oracle
